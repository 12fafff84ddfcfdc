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

#include "msr/bench.h"

#include <algorithm>
#include <chrono>
#include <limits>

#include "msr/error.h"
#include "msr/exchange.h"
#include "msr/greedy.h"
#include "msr/objective.h"
#include "msr/scenarios.h"

namespace msr {
namespace {

template <typename Fn>
double TimeMs(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::string_view BenchAxisName(BenchAxis axis) {
  return axis == BenchAxis::kItems ? "items" : "demands";
}

BenchAxis ParseBenchAxis(std::string_view name) {
  if (name == "items") return BenchAxis::kItems;
  if (name == "demands") return BenchAxis::kDemands;
  throw Error(ErrorCode::kConfig,
              "unknown bench axis '" + std::string(name) + "'");
}

std::vector<BenchRow> RunBench(const BenchOptions& options) {
  if (options.repeats < 1) {
    throw Error(ErrorCode::kConfig, "repeats must be at least 1");
  }
  std::vector<BenchRow> rows;
  for (int point : options.points) {
    if (point < 1) throw Error(ErrorCode::kConfig, "bench points must be >= 1");
    ScenarioConfig config;
    config.kind = ScenarioKind::kSynthetic;
    config.seed = options.seed;
    config.subset_size = options.subset_size;
    config.max_budget = options.max_budget;
    config.horizon = options.horizon;
    config.n_items =
        options.axis == BenchAxis::kItems ? point : options.fixed_items;
    config.n_demands =
        options.axis == BenchAxis::kDemands ? point : options.fixed_demands;

    config.mode = Mode::kMsrf;
    const Instance online = GenSynthetic(config);
    config.mode = Mode::kMsra;
    const Instance offline = GenSynthetic(config);

    ExchangeOptions quiet;
    quiet.verify = false;
    BenchRow greedy{point, "greedy_msrf", std::numeric_limits<double>::max(), 0};
    BenchRow exchange{point, "exchange", std::numeric_limits<double>::max(), 0};
    for (int r = 0; r < options.repeats; ++r) {
      SlotAssignment seq;
      greedy.wall_time_ms = std::min(
          greedy.wall_time_ms, TimeMs([&] { seq = GreedyMsrf(online); }));
      greedy.objective = Evaluate(online, seq);
      exchange.wall_time_ms = std::min(
          exchange.wall_time_ms, TimeMs([&] { seq = ExchangeMsri(offline, {}, quiet); }));
      exchange.objective = Evaluate(offline, seq);
    }
    rows.push_back(greedy);
    rows.push_back(exchange);
  }
  return rows;
}

}  // namespace msr
