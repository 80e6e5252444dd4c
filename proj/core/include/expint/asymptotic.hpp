#pragma once

#include "expint/types.hpp"

// Divergent large-argument expansions.  Every routine returns the exact
// partial sum the caller asked for together with a remainder bound; nothing
// here decides when to stop.  Use optimal_n for the order that minimizes the
// first omitted term.

namespace expint {

// Ei(x) ~ (e^x/x) * sum_{k=0}^{n} k!/x^k, x > 0.  The bound is the first
// omitted term (heuristic; the expansion has no sign alternation).  With
// log_scale the returned value is ln of the partial sum (x - ln x + ln S),
// usable past the e^x overflow point; the bound is then relative.
AsymptoticResult ei_asym(double x, int n, bool log_scale = false);

// E1(x) ~ e^{-x} [1/x - 1/x^2 + 2!/x^3 - ... + (-1)^{n-1}(n-1)!/x^n],
// n >= 1 terms, x > 0.  remainder_bound = n! e^{-x} / x^{n+1} is rigorous:
// the true remainder n! * integral of e^{-t}/t^{n+1} over [x, inf) is
// strictly below it for every n and x.
AsymptoticResult e1_asym(double x, int n);

// Partial sums of the two auxiliary factorial series behind Si and Ci:
//   even = sum_{k=0}^{n} (-1)^k (2k)!   / x^{2k}
//   odd  = sum_{k=0}^{n} (-1)^k (2k+1)! / x^{2k+1}
struct TrigAuxSums {
  double even = 0.0;
  double odd = 0.0;
};
TrigAuxSums trig_aux_sums(double x, int n);

// Si(x) ~ pi/2 - cos(x)/x * even - sin(x)/x * odd
// Ci(x) ~ sin(x)/x * even - cos(x)/x * odd
// The bound sums the first omitted term of each factor times its 1/x
// prefactor.
AsymptoticResult si_asym(double x, int n);
AsymptoticResult ci_asym(double x, int n);

// Logarithmic-integral expansions in powers of 1/ln x, x > e:
//   li(x)  ~ (x/ln x)     * sum_{k=0}^{n} k!/(ln x)^k
//   li1(x) ~ (1/(x ln x)) * sum_{k=0}^{n} (-1)^k k!/(ln x)^k
AsymptoticResult log_asym(FnId fn, double x, int n);

// Order n minimizing the magnitude of the first omitted term: scans the
// term-magnitude family of fn's expansion until it starts growing.  For E1
// this lands at n ~ floor(x).
int optimal_n(FnId fn, double x);

}  // namespace expint
