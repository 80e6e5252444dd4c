#pragma once

#include <cstdint>

#include "expint/types.hpp"

// Convergent power series for the exponential-integral family and the
// trigonometric integrals, plus the Ramanujan series for li.  Terms are
// always built by multiplicative recurrence; factorials never appear as
// standalone values, so there is no spurious overflow at large order.

namespace expint {

// Ei(x) = gamma + ln|x| + sum_{k>=1} x^k / (k * k!),  x != 0.
SeriesResult ei_series(double x, const TruncationPolicy& policy = {});

// E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k * k!),  x > 0.
// Alternating with terms peaking near k = x; accuracy_loss is flagged for
// x > 6 where cancellation costs more than ~5 digits.
SeriesResult e1_series(double x, const TruncationPolicy& policy = {});

// Ein(x) = sum_{k>=1} (-1)^{k+1} x^k / (k * k!); entire.
// Alternating for x > 0, so accuracy_loss is flagged for x > 6.
SeriesResult ein_series(double x, const TruncationPolicy& policy = {});

// Si(x) = sum_{k>=0} (-1)^k x^{2k+1} / ((2k+1)(2k+1)!); odd, entire.
// accuracy_loss for |x| > 12.
SeriesResult si_series(double x, const TruncationPolicy& policy = {});

// Ci(x) = gamma + ln x + sum_{k>=1} (-1)^k x^{2k} / ((2k)(2k)!),  x > 0.
// accuracy_loss for x > 12.
SeriesResult ci_series(double x, const TruncationPolicy& policy = {});

// Ramanujan's series for li(x), x > 1:
//   li(x) = gamma + ln ln x
//         + sqrt(x) * sum_{k>=1} (-1)^{k-1} (ln x)^k / (k! 2^{k-1})
//                     * sum_{j=0}^{floor((k-1)/2)} 1/(2j+1).
SeriesResult li_ramanujan(double x, const TruncationPolicy& policy = {});

// G(k) = H_k - ln k, the harmonic-minus-log sequence converging to gamma
// from above.  Compensated summation keeps the partial sums exact enough to
// reproduce printed 6-decimal values for k up to 1e6 and beyond.
double harmonic_gamma(std::uint64_t k);

}  // namespace expint
