#include <benchmark/benchmark.h>

#include "dkp/oracle.hpp"

namespace {

dkp::OracleConfig ground_config(int points) {
  dkp::OracleConfig cfg;
  cfg.params = dkp::ModelParams::from_m_zeta(1.0, 2.0);
  cfg.parity = dkp::Parity::even;
  cfg.e_est = dkp::energy(0, 2.0, 1.0, +1);
  cfg.x_max = dkp::oracle_x_max(cfg.params, cfg.e_est);
  cfg.points = points;
  cfg.k = 3;
  return cfg;
}

}  // namespace

static void BM_OracleSpectrum(benchmark::State& state) {
  const auto cfg = ground_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dkp::oracle_spectrum(cfg));
}
BENCHMARK(BM_OracleSpectrum)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

static void BM_OracleCrossValidate(benchmark::State& state) {
  const auto s = dkp::make_state(0, dkp::Parity::even, 0, +1, 1.0);
  const auto cfg = ground_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dkp::cross_validate(s, cfg));
}
BENCHMARK(BM_OracleCrossValidate)->Arg(4000)->Unit(benchmark::kMillisecond);
