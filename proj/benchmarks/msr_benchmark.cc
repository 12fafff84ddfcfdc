// Copyright 2026 The MSR Ranking Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "msr/exchange.h"
#include "msr/greedy.h"
#include "msr/objective.h"
#include "msr/scenarios.h"

namespace msr {
namespace {

Instance Synthetic(Mode mode, int n_items, int n_demands) {
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::kSynthetic;
  cfg.mode = mode;
  cfg.n_items = n_items;
  cfg.n_demands = n_demands;
  cfg.subset_size = 100;
  cfg.max_budget = 100;
  cfg.horizon = 100;
  return Generate(cfg);
}

void BM_GreedyMsrfDemands(benchmark::State& state) {
  const Instance inst =
      Synthetic(Mode::kMsrf, 1000, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(GreedyMsrf(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyMsrfDemands)
    ->RangeMultiplier(2)->Range(50, 400)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

void BM_GreedyMsrfItems(benchmark::State& state) {
  const Instance inst =
      Synthetic(Mode::kMsrf, static_cast<int>(state.range(0)), 100);
  for (auto _ : state) benchmark::DoNotOptimize(GreedyMsrf(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyMsrfItems)
    ->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

void BM_ExchangeDemands(benchmark::State& state) {
  const Instance inst =
      Synthetic(Mode::kMsra, 1000, static_cast<int>(state.range(0)));
  ExchangeOptions opts;
  opts.verify = false;
  for (auto _ : state) benchmark::DoNotOptimize(ExchangeMsri(inst, {}, opts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExchangeDemands)
    ->RangeMultiplier(2)->Range(50, 400)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

void BM_GreedyOffline(benchmark::State& state) {
  const Instance inst =
      Synthetic(Mode::kMsr, 1000, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(GreedyOffline(inst));
}
BENCHMARK(BM_GreedyOffline)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state) {
  const Instance inst = Synthetic(Mode::kMsrf, 1000, 200);
  const SlotAssignment seq = GreedyMsrf(inst);
  for (auto _ : state) benchmark::DoNotOptimize(Evaluate(inst, seq));
}
BENCHMARK(BM_Evaluate)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace msr

BENCHMARK_MAIN();
