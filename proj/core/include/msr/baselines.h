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

#ifndef MSR_BASELINES_H_
#define MSR_BASELINES_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "msr/instance.h"
#include "msr/slot_assignment.h"

namespace msr {

enum class BaselinePolicy { kRandom, kTopK, kLoopTopK };

std::string_view BaselineName(BaselinePolicy policy);

// Σ_i w_i f_i({v}) for every item v.
std::vector<double> SingletonUtilities(const Instance& instance);

// Fills ranks 1..R (R = instance.MaxRelevantRank()).
//   kRandom:   a uniformly random item per rank; without reuse, drawn from
//              the items not yet placed. Seeded and reproducible.
//   kTopK:     items in non-increasing singleton utility (ties: lowest id).
//   kLoopTopK: cycles the k_loop best items; needs allow_reuse unless the
//              cycle fits in one pass.
// Items that would break the base matroid are skipped. Throws kConfig when
// k_loop is missing (or < 1) for kLoopTopK.
SlotAssignment RunBaseline(BaselinePolicy policy, const Instance& instance,
                           std::uint64_t seed,
                           std::optional<int> k_loop = std::nullopt);

}  // namespace msr

#endif  // MSR_BASELINES_H_
