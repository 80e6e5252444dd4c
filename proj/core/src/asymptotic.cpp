#include "expint/asymptotic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "expint/errors.hpp"

namespace expint {
namespace {

// exp(x)/x evaluated so that arguments just past the exp() overflow point
// still work as long as the quotient itself is representable.
double exp_over_x(double x) {
  if (x < 709.0) return std::exp(x) / x;
  return std::exp(x - std::log(x));
}

void require_order(int n, int min_n, const char* what) {
  if (n < min_n) throw DomainError(std::string(what) + ": truncation order too small");
}

}  // namespace

AsymptoticResult ei_asym(double x, int n, bool log_scale) {
  if (!(x > 0.0)) throw DomainError("Ei expansion requires x > 0");
  require_order(n, 0, "ei_asym");

  double m = 1.0;  // k!/x^k
  double s = 1.0;
  for (int k = 1; k <= n; ++k) {
    m *= k / x;
    s += m;
  }
  const double first_omitted = m * (n + 1) / x;

  AsymptoticResult out;
  out.n = n;
  out.bound_kind = BoundKind::FirstOmittedTerm;
  if (log_scale) {
    out.value = x - std::log(x) + std::log(s);
    out.remainder_bound = first_omitted / s;  // relative; additive on the log
    return out;
  }
  if (x - std::log(x) > 709.5) {
    throw Overflow("Ei(x) exceeds double range; request log_scale");
  }
  const double pre = exp_over_x(x);
  out.value = pre * s;
  out.remainder_bound = pre * first_omitted;
  return out;
}

AsymptoticResult e1_asym(double x, int n) {
  if (!(x > 0.0)) throw DomainError("E1 expansion requires x > 0");
  require_order(n, 1, "e1_asym");

  double t = 1.0 / x;  // (-1)^{k-1} (k-1)!/x^k
  double s = t;
  for (int k = 2; k <= n; ++k) {
    t *= -(k - 1) / x;
    s += t;
  }
  const double ex = std::exp(-x);

  AsymptoticResult out;
  out.value = ex * s;
  out.n = n;
  // n! e^{-x}/x^{n+1}: the true remainder is n! times the integral of
  // e^{-t}/t^{n+1} over [x, inf), and t^{-(n+1)} <= x^{-(n+1)} there.
  out.remainder_bound = std::abs(t) * (n / x) * ex;
  out.bound_kind = BoundKind::Rigorous;
  return out;
}

TrigAuxSums trig_aux_sums(double x, int n) {
  if (x == 0.0) throw DomainError("trig_aux_sums requires x != 0");
  const double x2 = x * x;
  double e = 1.0;        // (-1)^k (2k)!/x^{2k}
  double o = 1.0 / x;    // (-1)^k (2k+1)!/x^{2k+1}
  TrigAuxSums s{e, o};
  for (int k = 1; k <= n; ++k) {
    e *= -(2.0 * k - 1.0) * (2.0 * k) / x2;
    o *= -(2.0 * k) * (2.0 * k + 1.0) / x2;
    s.even += e;
    s.odd += o;
  }
  return s;
}

namespace {

// Shared tail bound for the Si/Ci expansions: first omitted term of each
// auxiliary series, each carrying the extra 1/x of its trig prefactor.
double trig_tail_bound(double x, int n) {
  double e = 1.0, o = 1.0 / x;
  const double x2 = x * x;
  for (int k = 1; k <= n + 1; ++k) {
    e *= (2.0 * k - 1.0) * (2.0 * k) / x2;
    o *= (2.0 * k) * (2.0 * k + 1.0) / x2;
  }
  return (e + o) / x;
}

}  // namespace

AsymptoticResult si_asym(double x, int n) {
  if (!(x > 0.0)) throw DomainError("Si expansion requires x > 0");
  require_order(n, 0, "si_asym");
  const TrigAuxSums s = trig_aux_sums(x, n);
  AsymptoticResult out;
  out.value = std::numbers::pi / 2.0 - std::cos(x) / x * s.even - std::sin(x) / x * s.odd;
  out.n = n;
  out.remainder_bound = trig_tail_bound(x, n);
  out.bound_kind = BoundKind::FirstOmittedTerm;
  return out;
}

AsymptoticResult ci_asym(double x, int n) {
  if (!(x > 0.0)) throw DomainError("Ci expansion requires x > 0");
  require_order(n, 0, "ci_asym");
  const TrigAuxSums s = trig_aux_sums(x, n);
  AsymptoticResult out;
  out.value = std::sin(x) / x * s.even - std::cos(x) / x * s.odd;
  out.n = n;
  out.remainder_bound = trig_tail_bound(x, n);
  out.bound_kind = BoundKind::FirstOmittedTerm;
  return out;
}

AsymptoticResult log_asym(FnId fn, double x, int n) {
  if (!(x > std::numbers::e)) {
    throw DomainError("logarithmic expansion requires x > e");
  }
  require_order(n, 0, "log_asym");
  const double L = std::log(x);

  double m = 1.0;  // k!/L^k
  double s_plus = 1.0, s_alt = 1.0;
  double sign = 1.0;
  for (int k = 1; k <= n; ++k) {
    m *= k / L;
    sign = -sign;
    s_plus += m;
    s_alt += sign * m;
  }
  const double first_omitted = m * (n + 1) / L;

  AsymptoticResult out;
  out.n = n;
  out.bound_kind = BoundKind::FirstOmittedTerm;
  switch (fn.kind) {
    case FnId::Kind::li: {
      const double pre = x / L;
      out.value = pre * s_plus;
      out.remainder_bound = pre * first_omitted;
      return out;
    }
    case FnId::Kind::li1: {
      const double pre = 1.0 / (x * L);
      out.value = pre * s_alt;
      out.remainder_bound = pre * first_omitted;
      return out;
    }
    default:
      throw DomainError("log_asym supports li and li1 only");
  }
}

int optimal_n(FnId fn, double x) {
  constexpr int kCap = 500;
  switch (fn.kind) {
    case FnId::Kind::Ei:
    case FnId::Kind::E1: {
      if (!(x > 0.0)) throw DomainError("optimal_n requires x > 0");
      int n = 0;
      while (n < kCap && (n + 1) <= x) ++n;  // advance while m_{n+1} <= m_n
      return n;
    }
    case FnId::Kind::li:
    case FnId::Kind::li1: {
      if (!(x > 1.0)) throw DomainError("optimal_n for li family requires x > 1");
      const double L = std::log(x);
      int n = 0;
      while (n < kCap && (n + 1) <= L) ++n;
      return n;
    }
    case FnId::Kind::Si:
    case FnId::Kind::Ci: {
      if (x == 0.0) throw DomainError("optimal_n requires x != 0");
      const double x2 = x * x;
      int n = 0;
      while (n < kCap && (2.0 * n + 1.0) * (2.0 * n + 2.0) <= x2) ++n;
      return n;
    }
    default:
      throw DomainError("no asymptotic family for this function");
  }
}

}  // namespace expint
