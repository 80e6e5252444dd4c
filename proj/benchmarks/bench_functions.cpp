#include <benchmark/benchmark.h>

#include "expint/asymptotic.hpp"
#include "expint/evaluator.hpp"
#include "expint/primes.hpp"
#include "expint/quadrature.hpp"
#include "expint/series.hpp"

using namespace expint;

namespace {

void BM_E1Series(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(e1_series(x).value);
}
BENCHMARK(BM_E1Series)->Arg(1)->Arg(3)->Arg(6);

void BM_E1ContinuedFraction(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cf_e1(x).value);
}
BENCHMARK(BM_E1ContinuedFraction)->Arg(8)->Arg(20)->Arg(40);

void BM_E1Asymptotic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(e1_asym(50.0, 15).value);
}
BENCHMARK(BM_E1Asymptotic);

void BM_EiSeriesLarge(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ei_series(x).value);
}
BENCHMARK(BM_EiSeriesLarge)->Arg(10)->Arg(100)->Arg(500);

void BM_SiSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(si_series(10.0).value);
}
BENCHMARK(BM_SiSeries);

void BM_LiRamanujan(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(li_ramanujan(x).value);
}
BENCHMARK(BM_LiRamanujan)->Arg(100)->Arg(10000);

void BM_EvalDispatchE1(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  const FnId fn = FnId::of(FnId::Kind::E1);
  for (auto _ : state) benchmark::DoNotOptimize(eval_exp(fn, x).value);
}
BENCHMARK(BM_EvalDispatchE1)->Arg(3)->Arg(20)->Arg(60);

void BM_OracleE1(benchmark::State& state) {
  const FnId fn = FnId::of(FnId::Kind::E1);
  QuadConfig qc;
  qc.rel_tol = 1e-12;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_value(fn, 10.0, qc).value);
}
BENCHMARK(BM_OracleE1);

void BM_OracleCiOscillatory(benchmark::State& state) {
  const FnId fn = FnId::of(FnId::Kind::Ci);
  QuadConfig qc;
  qc.rel_tol = 1e-12;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_value(fn, 25.0, qc).value);
}
BENCHMARK(BM_OracleCiOscillatory);

void BM_OracleEiPrincipalValue(benchmark::State& state) {
  const FnId fn = FnId::of(FnId::Kind::Ei);
  QuadConfig qc;
  qc.rel_tol = 1e-12;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_value(fn, 5.0, qc).value);
}
BENCHMARK(BM_OracleEiPrincipalValue);

void BM_Sieve(benchmark::State& state) {
  const std::uint64_t limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve(limit).pi(limit));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(limit));
}
BENCHMARK(BM_Sieve)->Arg(100000)->Arg(1000000)->Complexity();

void BM_PrimeCountQuery(benchmark::State& state) {
  const PrimeTable table = sieve(1000000);
  std::uint64_t x = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(table.pi(x));
    x = x % 999983 + 2;
  }
}
BENCHMARK(BM_PrimeCountQuery);

}  // namespace

BENCHMARK_MAIN();
