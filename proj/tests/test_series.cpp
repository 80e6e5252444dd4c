#include <doctest.h>

#include <cmath>
#include <numbers>

#include "expint/constants.hpp"
#include "expint/errors.hpp"
#include "expint/series.hpp"

#include "reference.hpp"

using namespace expint;

namespace {
double rel_diff(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}
}  // namespace

TEST_CASE("ei series against frozen references") {
  CHECK(rel_diff(ei_series(1.0).value, ref::ei_1) <= 5e-16);
  CHECK(rel_diff(ei_series(5.0).value, ref::ei_5) <= 5e-16);
  CHECK(rel_diff(ei_series(20.0).value, ref::ei_20) <= 1e-15);
  CHECK(rel_diff(ei_series(100.0).value, ref::ei_100) <= 1e-15);
  CHECK(rel_diff(ei_series(0.01).value, ref::ei_0_01) <= 1e-15);
  CHECK(rel_diff(ei_series(-2.0).value, -ref::e1_2) <= 1e-14);
  CHECK(std::abs(ei_series(ref::ei_zero).value) <= 1e-16);
}

TEST_CASE("e1 series against frozen references") {
  CHECK(rel_diff(e1_series(0.5).value, ref::e1_0_5) <= 5e-16);
  CHECK(rel_diff(e1_series(1.0).value, ref::e1_1) <= 5e-16);
  CHECK(rel_diff(e1_series(2.0).value, ref::e1_2) <= 1e-15);
  // Past x ~ 4 the dominant error is the double-rounded gamma + ln x base
  // cancelling against the sum, about eps * (gamma + ln x) / E1(x).
  CHECK(rel_diff(e1_series(5.0).value, ref::e1_5) <= 5e-12);
  CHECK(rel_diff(e1_series(6.0).value, ref::e1_6) <= 5e-12);
}

TEST_CASE("ein series against frozen references and at zero") {
  CHECK(rel_diff(ein_series(1.0).value, ref::ein_1) <= 5e-16);
  CHECK(rel_diff(ein_series(5.0).value, ref::ein_5) <= 1e-15);
  CHECK(rel_diff(ein_series(-8.0).value, ref::ein_m8) <= 1e-15);
  CHECK(rel_diff(ein_series(30.0).value, ref::ein_30) <= 1e-13);

  const SeriesResult z = ein_series(0.0);
  CHECK(z.value == 0.0);
  CHECK(z.converged);
  CHECK(z.terms_used == 1);
}

TEST_CASE("trig series against frozen references") {
  CHECK(rel_diff(si_series(1.0).value, ref::si_1) <= 5e-16);
  CHECK(rel_diff(si_series(2.3).value, ref::si_2_3) <= 5e-16);
  CHECK(rel_diff(si_series(5.0).value, ref::si_5) <= 1e-15);
  CHECK(rel_diff(si_series(std::numbers::pi).value, ref::si_pi) <= 1e-15);
  CHECK(rel_diff(ci_series(1.0).value, ref::ci_1) <= 1e-15);
  CHECK(rel_diff(ci_series(5.0).value, ref::ci_5) <= 1e-14);
  CHECK(rel_diff(ci_series(2 * std::numbers::pi).value, ref::ci_2pi) <= 1e-13);
  CHECK(rel_diff(ci_series(12.0).value, ref::ci_12) <= 1e-11);
}

TEST_CASE("ramanujan li series against frozen references") {
  CHECK(rel_diff(li_ramanujan(1.5).value, ref::li_1_5) <= 1e-14);
  CHECK(rel_diff(li_ramanujan(2.0).value, ref::li_2) <= 1e-15);
  CHECK(rel_diff(li_ramanujan(10.0).value, ref::li_10) <= 1e-15);
  CHECK(rel_diff(li_ramanujan(100.0).value, ref::li_100) <= 1e-14);
  // The positive zero of li: the series must change sign there.
  CHECK(std::abs(li_ramanujan(Constants::soldner).value) <= 1e-14);
}

TEST_CASE("series siblings agree: Ein bridges E1 and the reflection to Ei") {
  for (const double x : {0.5, 1.0, 2.0, 5.0}) {
    const double lhs = ein_series(x).value;
    const double rhs = e1_series(x).value + Constants::gamma + std::log(x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
  CHECK(std::abs(e1_series(0.7).value + ei_series(-0.7).value) <= 1e-15);
}

TEST_CASE("si series is odd to the bit") {
  for (const double x : {0.3, 2.3, 7.0}) {
    CHECK(si_series(-x).value == -si_series(x).value);
  }
}

TEST_CASE("ci series matches a plain-double recomputation at moderate x") {
  // Same series summed naively in double; at x = 1.7 cancellation is mild so
  // the two must agree to near machine precision.
  const double x = 1.7;
  double term = 1.0, sum = 0.0;
  for (int k = 1; k <= 30; ++k) {
    term *= -x * x / ((2 * k - 1) * (2 * k));
    sum += term / (2 * k);
  }
  const double naive = Constants::gamma + std::log(x) + sum;
  CHECK(std::abs(ci_series(x).value - naive) <= 1e-14);
}

TEST_CASE("fixed-term truncation runs exactly n terms") {
  const SeriesResult s = si_series(1.0, TruncationPolicy::fixed_terms(3));
  CHECK(s.terms_used == 3);
  CHECK(s.converged);
  // Third Si term at x = 1: 1 / (5 * 5!) = 1/600.
  CHECK(s.last_term == doctest::Approx(1.0 / 600.0).epsilon(1e-15));

  const SeriesResult e = ein_series(1.0, TruncationPolicy::fixed_terms(2));
  CHECK(e.last_term == 0.25);
}

TEST_CASE("tolerance truncation reports term counts that grow with x") {
  const int n1 = e1_series(0.5).terms_used;
  const int n2 = e1_series(4.0).terms_used;
  CHECK(n1 < n2);
  CHECK(e1_series(1.0, TruncationPolicy::to_tolerance(1e-6)).terms_used <
        e1_series(1.0, TruncationPolicy::to_tolerance(1e-15)).terms_used);
}

TEST_CASE("starved term budget reports non-convergence") {
  const SeriesResult s = e1_series(5.0, TruncationPolicy::to_tolerance(1e-16, 5));
  CHECK_FALSE(s.converged);
  CHECK(s.terms_used == 5);
}

TEST_CASE("cancellation flags trip exactly past their thresholds") {
  CHECK_FALSE(e1_series(6.0).accuracy_loss);
  CHECK(e1_series(6.5).accuracy_loss);
  CHECK_FALSE(ein_series(6.0).accuracy_loss);
  CHECK(ein_series(6.5).accuracy_loss);
  CHECK_FALSE(ei_series(-6.0).accuracy_loss);
  CHECK(ei_series(-6.5).accuracy_loss);
  CHECK_FALSE(ei_series(100.0).accuracy_loss);  // all-positive terms
  CHECK_FALSE(si_series(12.0).accuracy_loss);
  CHECK(si_series(12.5).accuracy_loss);
  CHECK(si_series(-12.5).accuracy_loss);
  CHECK_FALSE(ci_series(12.0).accuracy_loss);
  CHECK(ci_series(12.5).accuracy_loss);
}

TEST_CASE("series domain errors") {
  CHECK_THROWS_AS(ei_series(0.0), DomainError);
  CHECK_THROWS_AS(e1_series(0.0), DomainError);
  CHECK_THROWS_AS(e1_series(-1.0), DomainError);
  CHECK_THROWS_AS(ci_series(0.0), DomainError);
  CHECK_THROWS_AS(ci_series(-1.0), DomainError);
  CHECK_THROWS_AS(li_ramanujan(1.0), DomainError);
  CHECK_THROWS_AS(li_ramanujan(0.5), DomainError);
  CHECK_THROWS_AS(ei_series(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("harmonic-minus-log sequence decreases toward gamma") {
  double prev = harmonic_gamma(10);
  for (std::uint64_t k = 11; k <= 100; ++k) {
    const double g = harmonic_gamma(k);
    CHECK(g < prev);
    CHECK(g > Constants::gamma);
    prev = g;
  }
  CHECK(std::abs(harmonic_gamma(3) - ref::hg_3) <= 1e-15);
  CHECK(std::abs(harmonic_gamma(11) - ref::hg_11) <= 1e-15);
  CHECK(std::abs(harmonic_gamma(47) - ref::hg_47) <= 1e-15);
  CHECK(std::abs(harmonic_gamma(859) - ref::hg_859) <= 1e-15);
}
