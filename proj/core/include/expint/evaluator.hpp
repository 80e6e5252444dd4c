#pragma once

#include <span>
#include <vector>

#include "expint/types.hpp"

// Full-precision evaluation with automatic route dispatch between the
// series, continued-fraction, asymptotic, and quadrature kernels.  Route
// seams are fixed (E1: series to 6, continued fraction to 44, asymptotic
// beyond; Si/Ci: series to 12, quadrature to 30, asymptotic beyond) and the
// result records which route ran plus an honest error estimate.

namespace expint {

// Ei, E1, En, Ein on the real line.
EvalResult eval_exp(FnId fn, double x);

// E1 via the Legendre continued fraction for the upper incomplete gamma at
// s = 0, evaluated by a product form that substitutes a tiny pivot instead
// of ever dividing by zero.  Primary route on 6 < x <= 44.
EvalResult cf_e1(double x, double rel_tol = 1e-15);

// Scaled form x e^x E1(x) by the same continued fraction; no overflow for
// any x > 0.
double e1_scaled_cf(double x, double rel_tol = 1e-15);

// Si (any real x, odd), Ci (x > 0).
EvalResult eval_trig(FnId fn, double x);

// li (x > 0, x != 1) via Ei(ln x); li1 (x > 1) via E1(ln x);
// Li (x >= 2) = li(x) - li(2), exactly zero at x = 2.
EvalResult eval_log(FnId fn, double x);

// E1 continued across the branch cut onto the negative real axis:
// E1(-x +- i0) = -Ei(x) -+ i pi for x > 0.
enum class BranchSide { Above, Below };
ComplexValue e1_branch(double x, BranchSide side);

// Values on the imaginary axis, reduced to real Si/Ci/Ei/E1 combinations:
//   Ei(+ix) =  Ci(x) + i(pi/2 + Si(x))      Ei(-ix) = conjugate
//   E1( ix) = -Ci(x) + i(Si(x) - pi/2)
//   Si( ix) = i (Ei(x) + E1(x))/2
//   Ci( ix) = (Ei(x) - E1(x))/2 + i pi/2
enum class ImagAxisFn { EiPlus, EiMinus, E1, Si, Ci };
ComplexValue imag_axis(ImagAxisFn fn, double x);

// Abscissas in (0, 2) where Ei, E1, Ein pairwise cross, by bisection on the
// evaluator differences.
struct Crossings {
  double ei_e1 = 0.0;
  double ei_ein = 0.0;
  double e1_ein = 0.0;
};
Crossings crossings();

// Time-averaged power radiated by a center-fed half-wave dipole carrying
// peak current i0: P = (i0^2 / 2c) * [gamma + ln(2 pi) - Ci(2 pi)].
// power_times_c is P * c, i.e. in Gaussian units multiply by 1/c.
struct DipolePower {
  double ci_2pi = 0.0;
  double bracket = 0.0;
  double power_times_c = 0.0;
};
DipolePower dipole_power(double i0);

// x e^x E1(x) for each x > 0, in scaled forms that never overflow.  The
// sequence tends to 1 with |x e^x E1(x) - 1| < 1.1/x on the tested range.
std::vector<double> exercise2_limit(std::span<const double> xs);

}  // namespace expint
