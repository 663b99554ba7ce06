#include <benchmark/benchmark.h>

#include "dkp/laguerre.hpp"

static void BM_LaguerreEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double w = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dkp::laguerre_eval(n, w));
    w += 1e-9;  // defeat value caching
  }
}
BENCHMARK(BM_LaguerreEval)->Arg(10)->Arg(50)->Arg(100);

static void BM_LaguerreRoots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dkp::laguerre_roots(n));
}
BENCHMARK(BM_LaguerreRoots)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_LaguerreResultant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dkp::laguerre_resultant(n));
}
BENCHMARK(BM_LaguerreResultant)->Arg(10)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);
