#pragma once

namespace expint {

// Shared mathematical constants, stored to full double precision.
struct Constants {
  // Euler-Mascheroni constant.
  static constexpr double gamma = 0.57721566490153286060651209008240243;
  // li(2), the offset subtracted by the Li table convention.
  static constexpr double li2 = 1.04516378011749278484458888919461313;
  // Positive zero of li(x).  Re-derived by root finding in the test suite.
  static constexpr double soldner = 1.45136923488338105028396848589202745;
  // Value of the Dirichlet integral of sin(t)/t over the half line, pi/2.
  static constexpr double dirichlet = 1.57079632679489661923132169163975144;
};

}  // namespace expint
