#include "expint/evaluator.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "expint/asymptotic.hpp"
#include "expint/constants.hpp"
#include "expint/errors.hpp"
#include "expint/quadrature.hpp"
#include "expint/series.hpp"

namespace expint {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// Series routes report last included term + rounding of the closed-form
// log/gamma part + a floor of a few ulps; the log part dominates wherever
// the sum cancels against it (worst at the E1 seam x = 6).
double series_err(const SeriesResult& s, double base_mag) {
  return s.last_term + kEps * base_mag + 4.0 * kEps * std::abs(s.value);
}

TruncationPolicy route_policy(int max_terms = 500) {
  return TruncationPolicy::to_tolerance(1e-16, max_terms);
}

EvalResult from_series(const SeriesResult& s, double base_mag) {
  if (!s.converged) throw AccuracyLoss("series route failed to converge");
  return {s.value, series_err(s, base_mag), Method::Series, s.terms_used};
}

// Value of the Legendre continued fraction K(x) with E1(x) = e^{-x} K(x):
//   K(x) = 1/(x+1 - 1^2/(x+3 - 2^2/(x+5 - ...))).
// Modified Lentz with tiny-pivot substitution instead of zero divisions.
double lentz_k(double x, double rel_tol, int& iters, double& final_delta) {
  constexpr double kTiny = 1e-308;
  double f = kTiny, c = f, d = 0.0;
  for (int j = 1; j <= 200; ++j) {
    const double a = (j == 1) ? 1.0 : -static_cast<double>(j - 1) * (j - 1);
    const double b = (j == 1) ? x + 1.0 : x + 2.0 * j - 1.0;
    d = b + a * d;
    if (d == 0.0) d = kTiny;
    c = b + a / c;
    if (c == 0.0) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < rel_tol) {
      iters = j;
      final_delta = delta;
      return f;
    }
  }
  throw NonConvergence("E1 continued fraction did not settle in 200 iterations");
}

EvalResult eval_e1(double x);

EvalResult eval_ei(double x) {
  if (x == 0.0) throw DomainError("Ei is undefined at x = 0");
  if (x < 0.0) {
    EvalResult r = eval_e1(-x);
    r.value = -r.value;
    return r;
  }
  // All series terms are positive for x > 0, so the series holds to the
  // overflow point; it just needs room for the ~x + O(sqrt x) terms.
  const SeriesResult s = ei_series(x, route_policy(1400));
  if (!std::isfinite(s.value)) throw Overflow("Ei(x) exceeds double range");
  return from_series(s, Constants::gamma + std::abs(std::log(x)));
}

EvalResult eval_e1(double x) {
  if (!(x > 0.0)) throw DomainError("E1 requires x > 0");
  if (x <= 6.0) {
    return from_series(e1_series(x, route_policy()),
                       Constants::gamma + std::abs(std::log(x)));
  }
  if (x <= 44.0) return cf_e1(x);
  const int n = std::min(optimal_n(FnId::of(FnId::Kind::E1), x), 60);
  const AsymptoticResult a = e1_asym(x, n);
  return {a.value, a.remainder_bound + 4.0 * kEps * std::abs(a.value),
          Method::Asymptotic, a.n};
}

EvalResult eval_en(FnId fn, double x) {
  const double n = fn.param;
  if (x < 0.0) throw DomainError("En requires x >= 0");
  if (x == 0.0) {
    if (!(n > 1.0)) throw DomainError("En(0) diverges unless n > 1");
    const double v = 1.0 / (n - 1.0);
    return {v, 4.0 * kEps * v, Method::Identity, 0};
  }
  QuadConfig qc;
  qc.rel_tol = 1e-13;
  qc.abs_tol = 0.0;
  const QuadResult q = oracle_value(fn, x, qc);
  if (!q.converged) throw AccuracyLoss("En quadrature missed its tolerance");
  return {q.value, std::max(q.abs_err_estimate, 4.0 * kEps * std::abs(q.value)),
          Method::Quadrature, q.subdivisions};
}

EvalResult eval_ein(double x) {
  if (x == 0.0) return {0.0, 0.0, Method::Series, 1};
  const SeriesResult s = ein_series(x, route_policy(1400));
  if (!s.converged) throw AccuracyLoss("Ein series failed to converge");
  // For x > 0 the sum alternates while the value stays O(ln x): the
  // double-double carry loses roughly eps^2 * sum of term magnitudes,
  // which is e^x/sqrt(x) to within a constant.
  double cancel = 0.0;
  if (x > 6.0) cancel = 100.0 * kEps * kEps * std::exp(std::min(x, 700.0)) / std::sqrt(x);
  const double err = s.last_term + cancel + 4.0 * kEps * std::abs(s.value);
  if (err > 1e-6 * std::abs(s.value)) {
    throw AccuracyLoss("Ein series cancellation exceeds tolerance at this x");
  }
  return {s.value, err, Method::Series, s.terms_used};
}

EvalResult eval_si(double x) {
  if (x == 0.0) return {0.0, 0.0, Method::Series, 1};
  const double ax = std::abs(x);
  if (ax <= 12.0) {
    const SeriesResult s = si_series(x, route_policy());
    return from_series(s, 0.0);
  }
  if (ax < 30.0) {
    QuadConfig qc;
    qc.rel_tol = 1e-13;
    qc.abs_tol = 1e-15;
    const QuadResult q = oracle_value(FnId::of(FnId::Kind::Si), x, qc);
    return {q.value, std::max(q.abs_err_estimate, 4.0 * kEps * std::abs(q.value)),
            Method::Quadrature, q.subdivisions};
  }
  const int n = std::min(optimal_n(FnId::of(FnId::Kind::Si), ax), 40);
  const AsymptoticResult a = si_asym(ax, n);
  const double v = x < 0.0 ? -a.value : a.value;
  return {v, a.remainder_bound + 4.0 * kEps * std::abs(v), Method::Asymptotic, a.n};
}

EvalResult eval_ci(double x) {
  if (!(x > 0.0)) throw DomainError("Ci requires x > 0");
  if (x <= 12.0) {
    return from_series(ci_series(x, route_policy()),
                       Constants::gamma + std::abs(std::log(x)));
  }
  if (x < 30.0) {
    QuadConfig qc;
    qc.rel_tol = 1e-13;
    qc.abs_tol = 1e-15;
    const QuadResult q = oracle_value(FnId::of(FnId::Kind::Ci), x, qc);
    return {q.value, std::max(q.abs_err_estimate, 4.0 * kEps * std::abs(q.value)),
            Method::Quadrature, q.subdivisions};
  }
  const int n = std::min(optimal_n(FnId::of(FnId::Kind::Ci), x), 40);
  const AsymptoticResult a = ci_asym(x, n);
  return {a.value, a.remainder_bound + 4.0 * kEps * std::abs(a.value),
          Method::Asymptotic, a.n};
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::Series: return "series";
    case Method::ContinuedFraction: return "continued-fraction";
    case Method::Asymptotic: return "asymptotic";
    case Method::Quadrature: return "quadrature";
    case Method::Identity: return "identity";
  }
  return "?";
}

EvalResult eval_exp(FnId fn, double x) {
  switch (fn.kind) {
    case FnId::Kind::Ei: return eval_ei(x);
    case FnId::Kind::E1: return eval_e1(x);
    case FnId::Kind::En: return eval_en(fn, x);
    case FnId::Kind::Ein: return eval_ein(x);
    default:
      throw DomainError("eval_exp handles Ei, E1, En, Ein");
  }
}

EvalResult cf_e1(double x, double rel_tol) {
  if (!(x > 0.0)) throw DomainError("E1 requires x > 0");
  int iters = 0;
  double delta = 1.0;
  const double k = lentz_k(x, rel_tol, iters, delta);
  const double v = std::exp(-x) * k;
  const double err = (std::abs(delta - 1.0) + 6.0 * kEps) * std::abs(v);
  return {v, err, Method::ContinuedFraction, iters};
}

double e1_scaled_cf(double x, double rel_tol) {
  if (!(x > 0.0)) throw DomainError("E1 requires x > 0");
  int iters = 0;
  double delta = 1.0;
  return x * lentz_k(x, rel_tol, iters, delta);
}

EvalResult eval_trig(FnId fn, double x) {
  switch (fn.kind) {
    case FnId::Kind::Si: return eval_si(x);
    case FnId::Kind::Ci: return eval_ci(x);
    default:
      throw DomainError("eval_trig handles Si and Ci");
  }
}

EvalResult eval_log(FnId fn, double x) {
  switch (fn.kind) {
    case FnId::Kind::li: {
      if (!(x > 0.0)) throw DomainError("li requires x > 0");
      if (std::abs(x - 1.0) < 1e-12) throw DomainError("li has a pole at x = 1");
      EvalResult r = eval_ei(std::log(x));
      // ln x carries half an ulp; through dli/d(ln x) = x/ln x that is
      // eps*x/2 of absolute uncertainty.
      r.abs_err_estimate += kEps * x;
      return r;
    }
    case FnId::Kind::li1: {
      if (!(x > 1.0) || std::abs(x - 1.0) < 1e-12) {
        throw DomainError("li1 requires x > 1");
      }
      EvalResult r = eval_e1(std::log(x));
      r.abs_err_estimate += kEps / x;
      return r;
    }
    case FnId::Kind::LiOffset: {
      if (!(x >= 2.0)) throw DomainError("Li requires x >= 2");
      if (x == 2.0) return {0.0, 0.0, Method::Identity, 0};
      EvalResult r = eval_log(FnId::of(FnId::Kind::li), x);
      r.value -= Constants::li2;
      r.abs_err_estimate += 4.0 * kEps * (std::abs(r.value) + Constants::li2);
      return r;
    }
    default:
      throw DomainError("eval_log handles li, li1, Li");
  }
}

ComplexValue e1_branch(double x, BranchSide side) {
  if (!(x > 0.0)) throw DomainError("branch values need x > 0");
  const double re = -eval_ei(x).value;
  return {re, side == BranchSide::Above ? -kPi : kPi};
}

ComplexValue imag_axis(ImagAxisFn fn, double x) {
  if (!(x > 0.0)) throw DomainError("imaginary-axis identities need x > 0");
  switch (fn) {
    case ImagAxisFn::EiPlus: {
      const double ci = eval_ci(x).value;
      const double si = eval_si(x).value;
      return {ci, kPi / 2.0 + si};
    }
    case ImagAxisFn::EiMinus: {
      const double ci = eval_ci(x).value;
      const double si = eval_si(x).value;
      return {ci, -(kPi / 2.0 + si)};
    }
    case ImagAxisFn::E1: {
      const double ci = eval_ci(x).value;
      const double si = eval_si(x).value;
      return {-ci, si - kPi / 2.0};
    }
    case ImagAxisFn::Si: {
      const double ei = eval_ei(x).value;
      const double e1 = eval_e1(x).value;
      return {0.0, 0.5 * (ei + e1)};
    }
    case ImagAxisFn::Ci: {
      const double ei = eval_ei(x).value;
      const double e1 = eval_e1(x).value;
      return {0.5 * (ei - e1), kPi / 2.0};
    }
  }
  throw DomainError("unhandled imaginary-axis function");
}

namespace {

double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if ((fa < 0.0) == (fm < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

double find_root(const std::function<double(double)>& f) {
  constexpr double kStep = 0.05;
  double prev_x = kStep;
  double prev_f = f(prev_x);
  for (double x = 2.0 * kStep; x < 2.0 + 0.5 * kStep; x += kStep) {
    const double fx = f(x);
    if ((prev_f < 0.0) != (fx < 0.0)) return bisect(f, prev_x, x);
    prev_x = x;
    prev_f = fx;
  }
  throw RootNotBracketed("no sign change on (0, 2)");
}

}  // namespace

Crossings crossings() {
  Crossings c;
  c.ei_e1 = find_root([](double x) { return eval_ei(x).value - eval_e1(x).value; });
  c.ei_ein = find_root([](double x) { return eval_ei(x).value - eval_ein(x).value; });
  c.e1_ein = find_root([](double x) { return eval_e1(x).value - eval_ein(x).value; });
  return c;
}

DipolePower dipole_power(double i0) {
  if (!(i0 >= 0.0)) throw DomainError("current amplitude must be nonnegative");
  DipolePower p;
  p.ci_2pi = eval_ci(2.0 * kPi).value;
  p.bracket = Constants::gamma + std::log(2.0 * kPi) - p.ci_2pi;
  p.power_times_c = 0.5 * i0 * i0 * p.bracket;
  return p;
}

std::vector<double> exercise2_limit(std::span<const double> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const double x : xs) {
    if (!(x > 0.0)) throw DomainError("the scaled limit needs x > 0");
    if (x <= 6.0) {
      out.push_back(x * std::exp(x) * e1_series(x, route_policy()).value);
    } else if (x <= 44.0) {
      out.push_back(e1_scaled_cf(x));
    } else {
      // x e^x E1(x) = x * sum of the asymptotic terms; the e^{-x} prefactor
      // cancels, so this form never overflows.
      const int n = std::min(optimal_n(FnId::of(FnId::Kind::E1), x), 60);
      double t = 1.0 / x, s = t;
      for (int k = 2; k <= n; ++k) {
        t *= -(k - 1) / x;
        s += t;
      }
      out.push_back(x * s);
    }
  }
  return out;
}

}  // namespace expint
