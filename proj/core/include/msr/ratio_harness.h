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

#ifndef MSR_RATIO_HARNESS_H_
#define MSR_RATIO_HARNESS_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "msr/instance.h"
#include "msr/serialization.h"
#include "msr/slot_assignment.h"

namespace msr {

using RankingAlgorithm = std::function<SlotAssignment(const Instance&)>;
using InstanceSource = std::function<Instance(std::uint64_t index)>;

struct RatioFailure {
  std::uint64_t index = 0;
  double alg = 0.0;
  double opt = 0.0;
  // The instance, serialized for replay.
  Json instance;
};

struct RatioReport {
  std::string algorithm;
  int count = 0;
  double floor = 0.0;
  // min ALG/OPT over instances with OPT > 0 (1 when there are none).
  double worst_ratio = 1.0;
  std::uint64_t worst_index = 0;
  std::vector<RatioFailure> failures;
  double seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

// Runs `algorithm` and BruteForce on instances 0..count-1 from `source`.
// An instance fails when ALG < floor * OPT - kTolerance.
RatioReport RunRatioHarness(const std::string& name,
                            const RankingAlgorithm& algorithm,
                            const InstanceSource& source, int count,
                            double floor);

}  // namespace msr

#endif  // MSR_RATIO_HARNESS_H_
