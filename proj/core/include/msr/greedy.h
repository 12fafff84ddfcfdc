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

#ifndef MSR_GREEDY_H_
#define MSR_GREEDY_H_

#include <span>

#include "msr/instance.h"
#include "msr/slot_assignment.h"
#include "msr/stream.h"

namespace msr {

// Omniscient greedy for offline rankings (kMsr, kMsra, kMsri). Walks ranks
// 1..R; at rank t the active demands are those whose window holds t, and the
// unused item with the largest weighted marginal gain against each active
// demand's items so far is placed (ties: lowest id). Ranks with no active
// demand are left empty. A base matroid, if present, restricts candidates
// to items that keep the placed set independent.
// Throws kConfig for kMsrf instances.
SlotAssignment GreedyOffline(const Instance& instance);

struct GreedyMsrfOptions {
  // Run even though items may not be reused. The result then has no
  // approximation guarantee.
  bool force = false;
};

// Online greedy for function-arriving rankings. At step t the batch for t is
// received, the active set is {f : t(f) <= t <= k(f)}, and the item
// maximizing Σ_{f active} w_f f(v | σ[t(f) : t-1]) is appended irrevocably
// (ties: lowest id). An empty active set places the dummy. Runs until the
// last deadline among received demands.
//
// Requires allow_reuse; otherwise throws kConfig unless options.force is set,
// in which case used items are excluded from later steps.
SlotAssignment GreedyMsrf(std::span<const FunctionBatch> stream, int n_items,
                          bool allow_reuse, const GreedyMsrfOptions& options = {});

// Convenience overload feeding the instance's demands by arrival step.
SlotAssignment GreedyMsrf(const Instance& instance,
                          const GreedyMsrfOptions& options = {});

}  // namespace msr

#endif  // MSR_GREEDY_H_
