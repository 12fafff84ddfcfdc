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

#ifndef MSR_BENCH_H_
#define MSR_BENCH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace msr {

enum class BenchAxis { kItems, kDemands };

std::string_view BenchAxisName(BenchAxis axis);
BenchAxis ParseBenchAxis(std::string_view name);

struct BenchOptions {
  BenchAxis axis = BenchAxis::kDemands;
  std::vector<int> points = {50, 100, 200, 400};
  std::uint64_t seed = 0;
  // Each point is timed this many times; the fastest run is reported.
  int repeats = 3;
  int fixed_items = 1000;   // held fixed on the demands axis
  int fixed_demands = 100;  // held fixed on the items axis
  int subset_size = 100;
  int max_budget = 100;
  int horizon = 100;
};

struct BenchRow {
  int size = 0;
  std::string algorithm;  // "greedy_msrf" or "exchange"
  double wall_time_ms = 0.0;
  double objective = 0.0;
};

// Synthetic coverage instances: function-arriving ones for greedy_msrf and
// slot-set ones for exchange. Generation is not timed.
std::vector<BenchRow> RunBench(const BenchOptions& options);

}  // namespace msr

#endif  // MSR_BENCH_H_
