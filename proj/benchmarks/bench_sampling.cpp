//
// qcmc - Copyright 2026 The qcmc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <benchmark/benchmark.h>

#include <vector>

#include "qcmc/bridge.h"
#include "qcmc/jumpproc.h"
#include "qcmc/rng.h"

namespace {

void BM_RngUniform(benchmark::State &state) {
  qcmc::Rng rng(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(rng.uniform());
}
BENCHMARK(BM_RngUniform);

void BM_RngNormal(benchmark::State &state) {
  qcmc::Rng rng(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(rng.standard_normal());
}
BENCHMARK(BM_RngNormal);

void BM_LevyBridge(benchmark::State &state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  qcmc::Rng rng(2);
  std::vector<double> out(k);
  for (auto _ : state) {
    qcmc::fill_levy_bridge(k, 1, rng, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(k));
}
BENCHMARK(BM_LevyBridge)->Arg(8)->Arg(32)->Arg(128);

void BM_ProcessStep(benchmark::State &state) {
  qcmc::ProcessConfig config;
  config.kind = state.range(0) == 0 ? qcmc::ProcessKind::N : qcmc::ProcessKind::W;
  config.copies = static_cast<std::size_t>(state.range(1));
  config.offset = 2;
  qcmc::JumpProcess process(config);
  qcmc::Rng rng(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(process.step(rng));
}
BENCHMARK(BM_ProcessStep)->Args({0, 8})->Args({0, 32})->Args({1, 32});

}  // namespace
