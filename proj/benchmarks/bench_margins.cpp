// Microbenchmarks for the hot paths: series evaluation, grid margins,
// slice minimization, section radii and root finding.

#include <benchmark/benchmark.h>

#include <complex>

#include "walpha/defaults.hpp"
#include "walpha/extremals.hpp"
#include "walpha/grid.hpp"
#include "walpha/harmonic.hpp"
#include "walpha/margins.hpp"
#include "walpha/radii.hpp"
#include "walpha/series.hpp"

namespace {

void BM_SeriesEvaluate(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  walpha::HarmonicMap f = walpha::sharp_sum(1.0, order);
  std::complex<double> z(0.37, -0.55);
  for (auto _ : state) {
    benchmark::DoNotOptimize(walpha::evaluate(f.h(), z));
  }
  state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesEvaluate)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ClassMargin(benchmark::State& state) {
  walpha::HarmonicMap f =
      walpha::random_member(1.0, 64, walpha::Defaults{}.seed, 0.5);
  walpha::AlphaParam alpha(1.0);
  walpha::DiskGrid grid = walpha::DiskGrid::defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(walpha::wh0_margin(f, alpha, grid).min_value);
  }
}
BENCHMARK(BM_ClassMargin);

void BM_SliceMinMargin(benchmark::State& state) {
  walpha::HarmonicMap f =
      walpha::random_member(1.0, 64, walpha::Defaults{}.seed, 0.5);
  walpha::AlphaParam alpha(1.0);
  walpha::DiskGrid grid(0.999, 16, 180);
  walpha::EpsilonSample eps(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        walpha::epsilon_min_margin(f, alpha, grid, eps).min_value);
  }
}
BENCHMARK(BM_SliceMinMargin)->Arg(90)->Arg(360);

void BM_SectionRadius(benchmark::State& state) {
  walpha::HarmonicMap f = walpha::sharp_sum(1.0, 32);
  walpha::AlphaParam alpha(1.0);
  walpha::DiskGrid grid(0.999, 8, 90);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        walpha::section_radius(f, alpha, 5, 2, grid, 1e-3).value);
  }
}
BENCHMARK(BM_SectionRadius);

void BM_QuinticRadius(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(walpha::quintic_radius(1e-9).value);
  }
}
BENCHMARK(BM_QuinticRadius);

}  // namespace

BENCHMARK_MAIN();
