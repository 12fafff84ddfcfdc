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

#include "msr/baselines.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "msr/error.h"
#include "msr/random.h"

namespace msr {

std::string_view BaselineName(BaselinePolicy policy) {
  switch (policy) {
    case BaselinePolicy::kRandom:
      return "random";
    case BaselinePolicy::kTopK:
      return "topk";
    case BaselinePolicy::kLoopTopK:
      return "looptopk";
  }
  return "?";
}

std::vector<double> SingletonUtilities(const Instance& instance) {
  std::vector<double> utility(static_cast<std::size_t>(instance.n_items), 0.0);
  for (const Demand& d : instance.demands) {
    const auto evaluator = d.oracle->NewEvaluator();
    evaluator->AccumulateGains(utility, d.weight);
  }
  return utility;
}

namespace {

std::vector<ItemId> ByUtility(const Instance& instance) {
  const std::vector<double> utility = SingletonUtilities(instance);
  std::vector<ItemId> order(utility.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
    return utility[a] > utility[b];
  });
  return order;
}

// Leading items of `order` that keep the base matroid satisfied, up to
// `limit` of them.
std::vector<ItemId> FeasiblePrefix(const Instance& instance,
                                   const std::vector<ItemId>& order,
                                   std::size_t limit) {
  std::vector<ItemId> chosen;
  for (ItemId v : order) {
    if (chosen.size() >= limit) break;
    if (instance.base_matroid && !instance.base_matroid->CanAdd(chosen, v)) {
      continue;
    }
    chosen.push_back(v);
  }
  return chosen;
}

}  // namespace

SlotAssignment RunBaseline(BaselinePolicy policy, const Instance& instance,
                           std::uint64_t seed, std::optional<int> k_loop) {
  instance.Validate();
  const Rank ranks = instance.MaxRelevantRank();
  const int n = instance.n_items;
  SlotAssignment seq;

  switch (policy) {
    case BaselinePolicy::kTopK: {
      const auto chosen = FeasiblePrefix(instance, ByUtility(instance),
                                         static_cast<std::size_t>(ranks));
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        seq.Assign(static_cast<Rank>(i + 1), chosen[i]);
      }
      return seq;
    }
    case BaselinePolicy::kLoopTopK: {
      if (!k_loop.has_value() || *k_loop < 1) {
        throw Error(ErrorCode::kConfig, "looptopk needs k_loop >= 1");
      }
      const auto loop = FeasiblePrefix(instance, ByUtility(instance),
                                       static_cast<std::size_t>(*k_loop));
      if (loop.empty()) return seq;
      if (!instance.allow_reuse &&
          static_cast<std::size_t>(ranks) > loop.size()) {
        throw Error(ErrorCode::kConfig,
                    "looptopk repeats items and needs allow_reuse");
      }
      for (Rank t = 1; t <= ranks; ++t) {
        seq.Assign(t, loop[static_cast<std::size_t>(t - 1) % loop.size()]);
      }
      return seq;
    }
    case BaselinePolicy::kRandom: {
      Rng rng = MakeRng(seed, "baseline:random");
      if (n == 0) return seq;
      if (instance.allow_reuse) {
        for (Rank t = 1; t <= ranks; ++t) {
          seq.Assign(t, static_cast<ItemId>(UniformInt(rng, 0, n - 1)));
        }
        return seq;
      }
      std::vector<ItemId> pool(static_cast<std::size_t>(n));
      std::iota(pool.begin(), pool.end(), 0);
      std::vector<ItemId> placed;
      for (Rank t = 1; t <= ranks && !pool.empty(); ++t) {
        // Draw until a feasible item turns up; infeasible ones are dropped
        // since the placed set only grows.
        while (!pool.empty()) {
          const auto idx = static_cast<std::size_t>(
              UniformInt(rng, 0, static_cast<std::int64_t>(pool.size()) - 1));
          const ItemId v = pool[idx];
          pool[idx] = pool.back();
          pool.pop_back();
          if (instance.base_matroid &&
              !instance.base_matroid->CanAdd(placed, v)) {
            continue;
          }
          seq.Assign(t, v);
          placed.push_back(v);
          break;
        }
      }
      return seq;
    }
  }
  return seq;
}

}  // namespace msr
