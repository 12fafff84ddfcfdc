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

#ifndef MSR_BRUTE_FORCE_H_
#define MSR_BRUTE_FORCE_H_

#include <cstdint>

#include "msr/instance.h"
#include "msr/slot_assignment.h"

namespace msr {

inline constexpr int kBruteForceMaxItems = 7;
inline constexpr int kBruteForceMaxRank = 6;

struct OptResult {
  double opt_value = 0.0;
  SlotAssignment opt_sequence;
  // Number of complete feasible assignments visited.
  std::int64_t search_space_size = 0;
};

// Exact optimum by exhaustive search over every relevant rank. Items are
// tried in id order with "leave empty" last, and only a strictly better
// value replaces the incumbent, so the witness is the lexicographically
// first maximizer. Honors allow_reuse and the base matroid. Throws kTooLarge
// when n_items > 7 or the highest relevant rank exceeds 6.
OptResult BruteForce(const Instance& instance);

}  // namespace msr

#endif  // MSR_BRUTE_FORCE_H_
