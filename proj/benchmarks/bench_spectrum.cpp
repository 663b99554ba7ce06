#include <benchmark/benchmark.h>

#include "dkp/spectrum.hpp"

static void BM_EvenZetaRoots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dkp::even_zeta_roots(n));
}
BENCHMARK(BM_EvenZetaRoots)->Arg(1)->Arg(5)->Arg(15)->Unit(benchmark::kMicrosecond);

static void BM_NormalizeState(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(dkp::make_state(2, dkp::Parity::odd, 0, +1, 1.0));
}
BENCHMARK(BM_NormalizeState)->Unit(benchmark::kMillisecond);

static void BM_EigenfunctionTable(benchmark::State& state) {
  const auto s = dkp::make_state(1, dkp::Parity::odd, 0, +1, 1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(dkp::eigenfunction_table(s, 6.0, 601, true));
}
BENCHMARK(BM_EigenfunctionTable)->Unit(benchmark::kMicrosecond);

static void BM_DegeneracyScan(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dkp::degeneracy_scan(n_max));
}
BENCHMARK(BM_DegeneracyScan)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);
