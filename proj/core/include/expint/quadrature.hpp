#pragma once

#include <functional>

#include "expint/types.hpp"

// Self-contained adaptive quadrature used as the independent cross-check for
// every series, continued-fraction, and asymptotic kernel in this library.
// Nothing here calls back into those kernels; oracle_value works straight
// from each function's defining integral.

namespace expint {

using Integrand = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod (G7, K15) quadrature over a finite
// interval: bisect the segment with the largest error estimate until the
// total estimate meets max(abs_tol, rel_tol * |value|) or the subdivision
// budget runs out (then converged = false).
QuadResult integrate_adaptive(const Integrand& f, double a, double b,
                              const QuadConfig& cfg = {});

// Cauchy principal value over [a, b] with a simple pole strictly inside.
// The pole is excluded symmetrically with radius h * pv_shrink^k; each shell
// integrates f(pole + s) + f(pole - s) so the 1/s parts cancel pointwise,
// and the exclusion-radius sequence is Richardson-extrapolated to zero.
QuadResult integrate_pv(const Integrand& f, double a, double b, double pole,
                        const QuadConfig& cfg = {});

// Integral of f over [a, inf).  Decaying integrands are mapped onto (0, 1]
// by u = 1/(1 + t - a).  If cfg.osc_period_hint is set the tail is instead
// summed between half-period nodes and the alternating partial sums are
// accelerated by repeated averaging.
QuadResult integrate_upper_infinite(const Integrand& f, double a,
                                    const QuadConfig& cfg = {});

// Integral of f over (-inf, b], via t -> -t and the machinery above.
QuadResult integrate_lower_infinite(const Integrand& f, double b,
                                    const QuadConfig& cfg = {});

// Evaluates fn at x directly from its defining integral (principal value
// where required), composing the integrators above.
QuadResult oracle_value(FnId fn, double x, const QuadConfig& cfg = {});

// Two independent integral representations of the Euler-Mascheroni constant
// and the additivity residual of the incomplete-gamma split at s=2, z=1.
struct GammaIntegralChecks {
  double appendix_a = 0.0;           // -integral of e^{-t} ln t over [0, inf)
  double appendix_b = 0.0;           // integral of (1 - e^{-t} - e^{-1/t})/t over [0, 1]
  double gamma_split_residual = 0.0; // Gamma(s,0) - lower(s,z) - upper(s,z)
};
GammaIntegralChecks gamma_integral_checks(const QuadConfig& cfg = {});

// The split residual at arbitrary (s, z), z > 0; s > 0 so Gamma(s,0) exists.
double gamma_split_residual(double s, double z, const QuadConfig& cfg = {});

// Both sides of the two integral identities exercised by `expint verify
// exercises`, evaluated entirely by quadrature.
enum class ExerciseId {
  EiSquareLaplace,      // [Ei(-x)]^2 as a Laplace transform, x > 0
  PartialFractionTail,  // lower-infinite integral of e^t/(t^2(t-1)), x < 0
};
struct ExerciseCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};
ExerciseCheck exercise_check(ExerciseId id, double x, const QuadConfig& cfg = {});

}  // namespace expint
