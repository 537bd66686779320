#include <benchmark/benchmark.h>

#include "teleport/dynamics.hpp"
#include "teleport/measures.hpp"
#include "teleport/mixed.hpp"
#include "teleport/random.hpp"

using namespace teleport;

static void BM_NegativityMixed(benchmark::State& state) {
  Rng rng(1);
  const DensityMatrix rho = random_density_matrix(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(negativity_mixed(rho));
}
BENCHMARK(BM_NegativityMixed)->DenseRange(2, 6);

static void BM_SingletFractionSearch(benchmark::State& state) {
  Rng rng(2);
  const DensityMatrix rho = random_density_matrix(static_cast<int>(state.range(0)), rng);
  OptimizerConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(singlet_fraction_mixed(rho, cfg, false).value);
}
BENCHMARK(BM_SingletFractionSearch)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CrenEstimate(benchmark::State& state) {
  Rng rng(3);
  const DensityMatrix rho = random_density_matrix(2, rng, static_cast<int>(state.range(0)));
  OptimizerConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(cren_estimate(rho, cfg).value);
}
BENCHMARK(BM_CrenEstimate)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Evolve(benchmark::State& state) {
  DynamicsConfig cfg;
  cfg.bath.temperature = 1.0;
  cfg.bath.squeeze_r = 0.1;
  cfg.model = state.range(0) ? ModelKind::QND : ModelKind::Dissipative;
  for (auto _ : state) benchmark::DoNotOptimize(evolve(cfg).points.size());
}
BENCHMARK(BM_Evolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
