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

#include "msr/ratio_harness.h"

#include <chrono>

#include "msr/brute_force.h"
#include "msr/objective.h"
#include "msr/types.h"

namespace msr {

RatioReport RunRatioHarness(const std::string& name,
                            const RankingAlgorithm& algorithm,
                            const InstanceSource& source, int count,
                            double floor) {
  const auto start = std::chrono::steady_clock::now();
  RatioReport report;
  report.algorithm = name;
  report.count = count;
  report.floor = floor;
  for (int i = 0; i < count; ++i) {
    const auto index = static_cast<std::uint64_t>(i);
    const Instance instance = source(index);
    const double alg = Evaluate(instance, algorithm(instance));
    const double opt = BruteForce(instance).opt_value;
    if (opt > 0.0 && alg / opt < report.worst_ratio) {
      report.worst_ratio = alg / opt;
      report.worst_index = index;
    }
    if (alg < floor * opt - kTolerance) {
      report.failures.push_back({index, alg, opt, InstanceToJson(instance)});
    }
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace msr
