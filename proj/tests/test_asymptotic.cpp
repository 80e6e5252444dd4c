#include <doctest.h>

#include <cmath>

#include "expint/asymptotic.hpp"
#include "expint/errors.hpp"
#include "expint/series.hpp"

#include "reference.hpp"

using namespace expint;

TEST_CASE("zeroth-order Ei expansion is exactly exp(x)/x") {
  const AsymptoticResult a = ei_asym(10.0, 0);
  CHECK(a.value == std::exp(10.0) / 10.0);
  CHECK(a.n == 0);
  CHECK(a.bound_kind == BoundKind::FirstOmittedTerm);
}

TEST_CASE("E1 expansion carries a rigorous bound that actually holds") {
  const AsymptoticResult a = e1_asym(10.0, 5);
  CHECK(a.bound_kind == BoundKind::Rigorous);
  // n! e^{-x} / x^{n+1} in closed form.
  CHECK(a.remainder_bound ==
        doctest::Approx(120.0 * std::exp(-10.0) / 1e6).epsilon(1e-14));
  CHECK(std::abs(a.value - ref::e1_10) <= a.remainder_bound);
  CHECK(std::abs(a.value - ref::e1_10) <= 5.45e-9);

  const AsymptoticResult b = e1_asym(50.0, 5);
  CHECK(std::abs(b.value - ref::e1_50) <= b.remainder_bound);
  CHECK(b.remainder_bound / ref::e1_50 < 1e-6);
}

TEST_CASE("near-optimal truncation reaches machine precision at x = 40") {
  const AsymptoticResult a = e1_asym(40.0, 38);
  CHECK(std::abs(a.value / ref::e1_40 - 1.0) <= 1e-13);
}

TEST_CASE("remainder bound decays in x at fixed order") {
  const double b5 = e1_asym(5.0, 4).remainder_bound;
  const double b10 = e1_asym(10.0, 4).remainder_bound;
  const double b20 = e1_asym(20.0, 4).remainder_bound;
  CHECK(b5 > b10);
  CHECK(b10 > b20);
}

TEST_CASE("pushing the order past optimal makes the error grow") {
  const double err5 = std::abs(e1_asym(5.0, 5).value - ref::e1_5);
  const double err20 = std::abs(e1_asym(5.0, 20).value - ref::e1_5);
  CHECK(err20 > 10.0 * err5);
}

TEST_CASE("auxiliary trig sums match hand-expanded partial sums") {
  const TrigAuxSums s = trig_aux_sums(10.0, 1);
  CHECK(s.even == doctest::Approx(1.0 - 2.0 / 100.0).epsilon(1e-15));
  CHECK(s.odd == doctest::Approx(0.1 - 6.0 / 1000.0).epsilon(1e-15));
}

TEST_CASE("Si and Ci expansions agree with references within their bounds") {
  const AsymptoticResult s = si_asym(25.0, 5);
  CHECK(std::abs(s.value - ref::si_25) <= s.remainder_bound);
  CHECK(std::abs(s.value - ref::si_25) <= 1e-8);
  const AsymptoticResult c = ci_asym(25.0, 5);
  CHECK(std::abs(c.value - ref::ci_25) <= c.remainder_bound);

  CHECK(std::abs(si_asym(1e4, 2).value - ref::si_1e4) <= 1e-12);
  CHECK(std::abs(ci_asym(1e4, 2).value - ref::ci_1e4) <= 1e-12);
}

TEST_CASE("logarithmic-integral expansion in 1/ln x") {
  // Closed form of the n = 3 partial sum.
  const double x = 1e4, L = std::log(x);
  const double want = x / L * (1.0 + 1.0 / L + 2.0 / (L * L) + 6.0 / (L * L * L));
  const AsymptoticResult a = log_asym(FnId::of(FnId::Kind::li), x, 3);
  CHECK(a.value == doctest::Approx(want).epsilon(1e-15));
  CHECK(a.bound_kind == BoundKind::FirstOmittedTerm);

  // The li terms all have one sign, so the true remainder can exceed the
  // first omitted term; by x = 1e6 it sits within a small multiple of it.
  const AsymptoticResult big = log_asym(FnId::of(FnId::Kind::li), 1e6, 8);
  CHECK(std::abs(big.value - ref::li_1e6) <= 5.0 * big.remainder_bound);
  CHECK(std::abs(big.value - ref::li_1e6) <= 5.0);

  const double xe = std::exp(2.0);
  const AsymptoticResult inv = log_asym(FnId::of(FnId::Kind::li1), xe, 1);
  CHECK(inv.value == doctest::Approx(1.0 / (4.0 * xe)).epsilon(1e-15));
}

TEST_CASE("log-scaled Ei expansion works far past double overflow") {
  const int n = optimal_n(FnId::of(FnId::Kind::Ei), 800.0);
  const AsymptoticResult a = ei_asym(800.0, n, true);
  CHECK(std::abs(a.value - ref::ln_ei_800) <= 1e-10);
  CHECK_THROWS_AS(ei_asym(800.0, 5), Overflow);
}

TEST_CASE("optimal truncation order tracks the argument") {
  CHECK(optimal_n(FnId::of(FnId::Kind::E1), 3.0) == 3);
  CHECK(optimal_n(FnId::of(FnId::Kind::E1), 10.5) == 10);
  CHECK(optimal_n(FnId::of(FnId::Kind::E1), 40.0) == 40);
  CHECK(optimal_n(FnId::of(FnId::Kind::Si), 20.0) == 10);
  CHECK(optimal_n(FnId::of(FnId::Kind::E1), 1e6) == 500);  // capped
  const int n_li = optimal_n(FnId::of(FnId::Kind::li), 1e6);
  CHECK(n_li >= 10);
  CHECK(n_li <= 14);
}

TEST_CASE("asymptotic domain errors") {
  CHECK_THROWS_AS(e1_asym(-1.0, 3), DomainError);
  CHECK_THROWS_AS(e1_asym(5.0, 0), DomainError);
  CHECK_THROWS_AS(ei_asym(-5.0, 3), DomainError);
  CHECK_THROWS_AS(ei_asym(0.0, 3), DomainError);
  CHECK_THROWS_AS(si_asym(0.0, 3), DomainError);
  CHECK_THROWS_AS(ci_asym(-2.0, 3), DomainError);
  CHECK_THROWS_AS(trig_aux_sums(0.0, 3), DomainError);
  CHECK_THROWS_AS(log_asym(FnId::of(FnId::Kind::li), 2.0, 3), DomainError);
  CHECK_THROWS_AS(log_asym(FnId::of(FnId::Kind::E1), 10.0, 3), DomainError);
  CHECK_THROWS_AS(optimal_n(FnId::of(FnId::Kind::li), 1.0), DomainError);
  CHECK_THROWS_AS(optimal_n(FnId::of(FnId::Kind::E1), -1.0), DomainError);
  CHECK_THROWS_AS(optimal_n(FnId::gamma_upper(2.0), 1.0), DomainError);
}
