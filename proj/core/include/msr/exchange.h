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

#ifndef MSR_EXCHANGE_H_
#define MSR_EXCHANGE_H_

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "msr/instance.h"
#include "msr/lifted_objective.h"
#include "msr/rank_extended_matroid.h"
#include "msr/slot_assignment.h"

namespace msr {

enum class Placement {
  // Every (item, rank) pair in ascending rank order is a stream element of
  // its own: each may insert or swap, including swaps that move the item to
  // a later rank.
  kEveryRank,
  // Ranks in ascending order; stop at the first insert or swap.
  kFirstSuccess,
  // Evaluate every rank and take the feasible action with the largest gain.
  kBestGain,
};

struct ExchangeOptions {
  // A newcomer replaces its conflicts when its gain is at least
  // threshold * (sum of their frozen weights).
  double threshold = 2.0;
  Placement placement = Placement::kEveryRank;
  // Re-check independence and the eviction rule after every event.
  bool verify = true;
};

struct ExchangeStats {
  std::size_t arrivals = 0;
  std::size_t inserts = 0;
  std::size_t swaps = 0;
  std::size_t evicted = 0;
  std::size_t discarded = 0;
  std::size_t peak_solution_size = 0;
};

// One-pass exchange algorithm for item-arriving rankings. The solution is a
// set of (item, rank) pairs kept independent in the lifted matroid; each
// member carries the marginal gain it had when inserted (its frozen weight).
// Memory is bounded by the number of relevant ranks, not by the stream.
class ExchangeState {
 public:
  // Windows are read under `mode` (kMsr uses prefixes, kMsra/kMsri slots).
  ExchangeState(std::vector<Demand> demands, Mode mode, int n_items,
                std::shared_ptr<const ItemMatroid> base,
                ExchangeOptions options = {});

  // Consumes one arriving item. Items currently held are skipped. Throws
  // kMalformedInput for ids outside [0, n_items).
  void Process(ItemId item);

  const std::map<ExtendedElement, double>& frozen_weights() const {
    return solution_;
  }
  std::vector<ExtendedElement> Elements() const;
  double FrozenTotal() const;
  // g(S) of the current solution.
  double LiftedValue() const;
  // The solution ordered by rank (sparse).
  SlotAssignment Sequence() const;

  const RankExtendedMatroid& matroid() const { return matroid_; }
  const LiftedObjective& objective() const { return objective_; }
  const ExchangeStats& stats() const { return stats_; }
  // Number of distinct relevant ranks; the solution never exceeds it.
  std::size_t capacity() const { return objective_.ranks().size(); }

 private:
  struct Action {
    ExtendedElement element;
    double gain = 0.0;
    std::vector<ExtendedElement> evict;
    double evicted_weight = 0.0;
  };

  double Gain(const ExtendedElement& e) const;
  // A feasible insert or swap for e, if the rules allow one.
  bool TryAction(const ExtendedElement& e, Action* action) const;
  void Apply(const Action& action);
  void Commit(const Action& action);
  void Verify(const Action& action, double frozen_before) const;

  LiftedObjective objective_;
  RankExtendedMatroid matroid_;
  ExchangeOptions options_;
  int n_items_;

  std::map<ExtendedElement, double> solution_;
  std::map<Rank, ItemId> rank_holder_;
  std::map<ItemId, Rank> item_rank_;
  std::vector<ExtendedElement> elements_;  // cache of solution_ keys
  std::vector<std::unique_ptr<IncrementalEvaluator>> evaluators_;
  ExchangeStats stats_;
};

// Runs the exchange algorithm over `stream` and returns the sparse ranking.
SlotAssignment ExchangeMsri(std::span<const ItemId> stream,
                            std::span<const Demand> demands, int n_items,
                            std::shared_ptr<const ItemMatroid> base,
                            const ExchangeOptions& options = {});

// Instance form: the stream defaults to items 0..n-1 in id order when empty.
// For prefix-window instances the result is compacted forward, which never
// lowers the objective. Throws kConfig for kMsrf instances.
SlotAssignment ExchangeMsri(const Instance& instance,
                            std::span<const ItemId> stream = {},
                            const ExchangeOptions& options = {});

}  // namespace msr

#endif  // MSR_EXCHANGE_H_
