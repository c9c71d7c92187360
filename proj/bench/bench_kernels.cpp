// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to taste.

#include <benchmark/benchmark.h>

#include "cfdyn/sweep.hpp"

namespace {

cfdyn::PopulationConfig config(int Z) {
  cfdyn::PopulationConfig cfg;
  cfg.population_size = Z;
  cfg.game = {6, 3, 5.5, 1.0};
  cfg.mode = cfdyn::UpdateMode::Mixed;
  cfg.chi = 0.5;
  return cfg;
}

void BM_FitnessTableSerial(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cfdyn::serial::build_fitness_table(cfg));
}

void BM_FitnessTableParallel(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cfdyn::build_fitness_table(cfg));
}

void BM_KernelSerial(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)));
  const auto table = cfdyn::build_fitness_table(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(cfdyn::serial::build_kernel(cfg, table));
}

void BM_KernelParallel(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)));
  const auto table = cfdyn::build_fitness_table(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(cfdyn::build_kernel(cfg, table));
}

void BM_SweepChiSerial(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)));
  const auto grid = cfdyn::linear_grid(0.0, 1.0, 101);
  for (auto _ : state) benchmark::DoNotOptimize(cfdyn::serial::sweep_chi(cfg, grid));
}

void BM_SweepChiParallel(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)));
  const auto grid = cfdyn::linear_grid(0.0, 1.0, 101);
  for (auto _ : state) benchmark::DoNotOptimize(cfdyn::sweep_chi(cfg, grid));
}

}  // namespace

BENCHMARK(BM_FitnessTableSerial)->Arg(50)->Arg(1000)->Arg(10000);
BENCHMARK(BM_FitnessTableParallel)->Arg(50)->Arg(1000)->Arg(10000);
BENCHMARK(BM_KernelSerial)->Arg(50)->Arg(1000)->Arg(10000);
BENCHMARK(BM_KernelParallel)->Arg(50)->Arg(1000)->Arg(10000);
BENCHMARK(BM_SweepChiSerial)->Arg(50)->Arg(1000);
BENCHMARK(BM_SweepChiParallel)->Arg(50)->Arg(1000);

BENCHMARK_MAIN();
