// SPDX-License-Identifier: Apache-2.0
// Serial reference versus OpenMP execution of the Monte Carlo kernels.
#include <benchmark/benchmark.h>

#include "compsel/config.hpp"
#include "compsel/experiments.hpp"
#include "compsel/scheduling.hpp"

using namespace compsel;

namespace {

ExecPolicy policy_of(const benchmark::State& state) {
  if (state.range(0) == 0) return kSerial;
  return {Execution::Parallel, static_cast<int>(state.range(1))};
}

void BM_Orthogonality(benchmark::State& state) {
  OrthogonalityStudy study;
  study.scheduler = SchedulerKind::Sus;
  const auto policy = policy_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_orthogonality(study, 2000, 7, policy));
}

void BM_Fig3(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.drops = 200;
  const auto policy = policy_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_fig3(cfg, policy).points.size());
}

void BM_Fig5Drops(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.drops = 16;
  cfg.fading_blocks = 20;
  const auto policy = policy_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_fig5(cfg, 5.0, policy).users.size());
}

void modes(benchmark::internal::Benchmark* b) {
  b->Args({0, 1})->Args({1, 1})->Args({1, 2})->Args({1, 4})->ArgNames({"parallel", "threads"});
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_Orthogonality)->Apply(modes);
BENCHMARK(BM_Fig3)->Apply(modes);
BENCHMARK(BM_Fig5Drops)->Apply(modes);

BENCHMARK_MAIN();
