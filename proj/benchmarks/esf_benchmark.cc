// Copyright 2026 The esf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "esf/estimators.h"
#include "esf/likelihood.h"
#include "esf/montecarlo.h"
#include "esf/sampler.h"
#include "esf/stirling.h"

namespace {

void BM_SamplePartition(benchmark::State& state) {
  esf::RandomStream stream(1);
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(esf::SamplePartition(n, 50.0, stream));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SamplePartition)->Arg(20)->Arg(100)->Arg(1000)->Arg(10000);

void BM_StirlingTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(esf::StirlingTable(state.range(0)));
  }
}
BENCHMARK(BM_StirlingTable)->Arg(100)->Arg(1000);

void BM_SolveMle(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(esf::SolveMle(n / 10 + 2, n));
  }
}
BENCHMARK(BM_SolveMle)->Arg(20)->Arg(1000)->Arg(10000);

void BM_SolveAdjustedMle(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(esf::SolveAdjustedMle(n / 10 + 2, n));
  }
}
BENCHMARK(BM_SolveAdjustedMle)->Arg(20)->Arg(1000)->Arg(10000);

void BM_EstimateBc1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(esf::EstimateBc1(40, 1000, 1, 10000));
  }
}
BENCHMARK(BM_EstimateBc1);

void BM_ExperimentCell(benchmark::State& state) {
  esf::ExperimentConfig config;
  config.n_values = {state.range(0)};
  config.theta_values = {50.0};
  config.reps = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(esf::RunExperiment(config, 1));
  }
}
BENCHMARK(BM_ExperimentCell)->Arg(20)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
