#include <benchmark/benchmark.h>

#include "besselsum/arith.hpp"
#include "besselsum/identities.hpp"
#include "besselsum/special.hpp"

namespace {

void BM_RkTable(benchmark::State& state) {
  const auto n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(besselsum::arith::rk_table(8, n_max));
}
BENCHMARK(BM_RkTable)->RangeMultiplier(4)->Range(256, 65536);

void BM_BesselJSeries(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(besselsum::special::bessel_j(1.0, x));
    x = x < 29.0 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_BesselJSeries);

void BM_BesselJAsymptotic(benchmark::State& state) {
  double x = 31.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(besselsum::special::bessel_j(1.0, x));
    x = x < 500.0 ? x + 1.7 : 31.0;
  }
}
BENCHMARK(BM_BesselJAsymptotic);

void BM_BesselIScaled(benchmark::State& state) {
  const besselsum::Complex w(state.range(0), 0.3 * state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(besselsum::special::bessel_i_scaled(0.0, w));
}
BENCHMARK(BM_BesselIScaled)->Arg(5)->Arg(50);

void BM_Popov(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(besselsum::identities::popov(k, 0.7, 1.3, 1e-9));
}
BENCHMARK(BM_Popov)->Arg(2)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_Sine(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(besselsum::identities::sine(besselsum::Rational::make(2, 7), 0.3, 1.0, 1e-9));
  }
}
BENCHMARK(BM_Sine)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
