#include "expint/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "expint/constants.hpp"
#include "expint/errors.hpp"

namespace expint {
namespace {

// Double-double scratch arithmetic.  Terms are produced by multiplying the
// previous term by a ratio of small integers and x, and every such step is
// carried in two doubles, so the accumulated term error stays O(eps^2) and
// the ~1e-11 seam agreement between routes survives even where the series
// alternates hard.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_mul_d(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div_d(DD a, double b) {
  const double q1 = a.hi / b;
  DD p = two_prod(q1, b);
  const double q2 = (a.hi - p.hi - p.lo + a.lo) / b;
  return quick_two_sum(q1, q2);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

inline double dd_val(DD a) { return a.hi + a.lo; }

// Shared truncation bookkeeping.  ToTolerance stops after two consecutive
// terms at or below rel_tol * |current value| (or below an absolute floor
// that catches underflowing tails); FixedTerms never stops early.
class TermLoop {
 public:
  explicit TermLoop(const TruncationPolicy& p) : p_(p) {}
  int cap() const { return std::max(1, p_.max_terms); }
  bool fixed() const { return p_.mode == TruncationMode::FixedTerms; }
  bool settled(double term_mag, double value_mag) {
    if (fixed()) return false;
    if (term_mag < 1e-300) return true;
    below_ = (term_mag <= p_.rel_tol * value_mag) ? below_ + 1 : 0;
    return below_ >= 2;
  }

 private:
  const TruncationPolicy& p_;
  int below_ = 0;
};

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + " requires a finite argument");
}

// sum_{k>=1} sign^{k+1} x^k / (k * k!) with sign = +1 or -1, the common core
// of the Ei / E1 / Ein series.  `base` is the closed-form part added outside
// the sum, included here so the stopping rule sees the full value.
SeriesResult exp_family_sum(double x, double sign, double base,
                            const TruncationPolicy& policy) {
  TermLoop loop(policy);
  SeriesResult out;
  DD t{x, 0.0};  // sign^{k+1} x^k / k!
  DD sum{0.0, 0.0};
  for (int k = 1; k <= loop.cap(); ++k) {
    // Divide before multiplying: near the peak term k ~ x the product
    // t * x can overflow a double even when t and the final sum both fit.
    if (k > 1) t = dd_mul_d(dd_div_d(t, static_cast<double>(k)), sign * x);
    const DD term = dd_div_d(t, static_cast<double>(k));
    sum = dd_add(sum, term);
    out.terms_used = k;
    out.last_term = std::abs(dd_val(term));
    out.value = base + dd_val(sum);
    if (loop.settled(out.last_term, std::abs(out.value))) {
      out.converged = true;
      break;
    }
  }
  if (loop.fixed()) out.converged = true;
  return out;
}

}  // namespace

SeriesResult ei_series(double x, const TruncationPolicy& policy) {
  require_finite(x, "ei_series");
  if (x == 0.0) throw DomainError("Ei is undefined at x = 0");
  SeriesResult out =
      exp_family_sum(x, 1.0, Constants::gamma + std::log(std::abs(x)), policy);
  // For x < 0 the sum alternates and cancels against the log term.
  out.accuracy_loss = x < -6.0;
  return out;
}

SeriesResult e1_series(double x, const TruncationPolicy& policy) {
  require_finite(x, "e1_series");
  if (!(x > 0.0)) throw DomainError("E1 series requires x > 0");
  SeriesResult out =
      exp_family_sum(x, -1.0, -Constants::gamma - std::log(x), policy);
  out.accuracy_loss = x > 6.0;
  return out;
}

SeriesResult ein_series(double x, const TruncationPolicy& policy) {
  require_finite(x, "ein_series");
  if (x == 0.0) {
    return SeriesResult{0.0, 1, 0.0, true, false};
  }
  SeriesResult out = exp_family_sum(x, -1.0, 0.0, policy);
  out.accuracy_loss = x > 6.0;
  return out;
}

SeriesResult si_series(double x, const TruncationPolicy& policy) {
  require_finite(x, "si_series");
  TermLoop loop(policy);
  SeriesResult out;
  if (x == 0.0) return SeriesResult{0.0, 1, 0.0, true, false};

  const DD xx = two_prod(x, x);
  DD u{x, 0.0};  // (-1)^k x^{2k+1} / (2k+1)!
  DD sum{0.0, 0.0};
  for (int k = 0; k < loop.cap(); ++k) {
    if (k > 0) {
      u = dd_div_d(dd_div_d(dd_mul(dd_neg(u), xx), static_cast<double>(2 * k)),
                   static_cast<double>(2 * k + 1));
    }
    const DD term = dd_div_d(u, static_cast<double>(2 * k + 1));
    sum = dd_add(sum, term);
    out.terms_used = k + 1;
    out.last_term = std::abs(dd_val(term));
    out.value = dd_val(sum);
    if (loop.settled(out.last_term, std::abs(out.value))) {
      out.converged = true;
      break;
    }
  }
  if (loop.fixed()) out.converged = true;
  out.accuracy_loss = std::abs(x) > 12.0;
  return out;
}

SeriesResult ci_series(double x, const TruncationPolicy& policy) {
  require_finite(x, "ci_series");
  if (!(x > 0.0)) throw DomainError("Ci series requires x > 0");
  TermLoop loop(policy);
  SeriesResult out;
  const double base = Constants::gamma + std::log(x);

  const DD xx = two_prod(x, x);
  DD v = dd_div_d(dd_neg(xx), 2.0);  // (-1)^k x^{2k} / (2k)!, starting at k=1
  DD sum{0.0, 0.0};
  for (int k = 1; k <= loop.cap(); ++k) {
    if (k > 1) {
      v = dd_div_d(dd_div_d(dd_mul(dd_neg(v), xx), static_cast<double>(2 * k - 1)),
                   static_cast<double>(2 * k));
    }
    const DD term = dd_div_d(v, static_cast<double>(2 * k));
    sum = dd_add(sum, term);
    out.terms_used = k;
    out.last_term = std::abs(dd_val(term));
    out.value = base + dd_val(sum);
    if (loop.settled(out.last_term, std::abs(out.value))) {
      out.converged = true;
      break;
    }
  }
  if (loop.fixed()) out.converged = true;
  out.accuracy_loss = x > 12.0;
  return out;
}

SeriesResult li_ramanujan(double x, const TruncationPolicy& policy) {
  require_finite(x, "li_ramanujan");
  if (!(x > 1.0)) throw DomainError("Ramanujan li series requires x > 1");
  TermLoop loop(policy);
  SeriesResult out;

  const double L = std::log(x);
  const double sqrt_x = std::sqrt(x);
  const double base = Constants::gamma + std::log(L);

  DD t{L, 0.0};  // (-1)^{k-1} L^k / (k! 2^{k-1})
  DD sum{0.0, 0.0};
  double h = 1.0;  // sum_{j=0}^{floor((k-1)/2)} 1/(2j+1)
  for (int k = 1; k <= loop.cap(); ++k) {
    if (k > 1) {
      t = dd_div_d(dd_mul_d(t, -L), 2.0 * k);
      if (k % 2 == 1) h += 1.0 / k;
    }
    const DD term = dd_mul_d(t, h);
    sum = dd_add(sum, term);
    out.terms_used = k;
    out.last_term = sqrt_x * std::abs(dd_val(term));
    out.value = base + sqrt_x * dd_val(sum);
    if (loop.settled(out.last_term, std::abs(out.value))) {
      out.converged = true;
      break;
    }
  }
  if (loop.fixed()) out.converged = true;
  return out;
}

double harmonic_gamma(std::uint64_t k) {
  if (k == 0) throw DomainError("harmonic_gamma requires k >= 1");
  double s = 0.0, c = 0.0;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const double y = 1.0 / static_cast<double>(i) - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s - std::log(static_cast<double>(k));
}

}  // namespace expint
