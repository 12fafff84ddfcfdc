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

#include "msr/greedy.h"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "msr/error.h"

namespace msr {
namespace {

// Index of the largest gain among eligible items; lowest id wins ties.
// Returns -1 when nothing is eligible.
template <typename Eligible>
ItemId ArgMax(const std::vector<double>& gains, Eligible&& eligible) {
  ItemId best = -1;
  double best_gain = 0.0;
  for (ItemId v = 0; v < static_cast<ItemId>(gains.size()); ++v) {
    if (!eligible(v)) continue;
    if (best < 0 || gains[v] > best_gain) {
      best = v;
      best_gain = gains[v];
    }
  }
  return best;
}

}  // namespace

SlotAssignment GreedyOffline(const Instance& instance) {
  if (instance.mode == Mode::kMsrf) {
    throw Error(ErrorCode::kConfig,
                "offline greedy needs an offline instance (MSR/MSRA/MSRI)");
  }
  instance.Validate();
  const int n = instance.n_items;
  const auto& demands = instance.demands;

  std::map<Rank, std::vector<int>> active_at;
  for (std::size_t i = 0; i < demands.size(); ++i) {
    for (Rank r : demands[i].Window(instance.mode)) {
      active_at[r].push_back(static_cast<int>(i));
    }
  }
  std::vector<std::unique_ptr<IncrementalEvaluator>> evaluators;
  for (const Demand& d : demands) evaluators.push_back(d.oracle->NewEvaluator());

  SlotAssignment seq;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<ItemId> placed;
  std::vector<double> gains(static_cast<std::size_t>(n));
  for (const auto& [rank, active] : active_at) {
    std::fill(gains.begin(), gains.end(), 0.0);
    for (int i : active) {
      evaluators[i]->AccumulateGains(gains, demands[i].weight);
    }
    const auto* base = instance.base_matroid.get();
    const ItemId best = ArgMax(gains, [&](ItemId v) {
      if (used[v]) return false;
      return base == nullptr || base->CanAdd(placed, v);
    });
    if (best < 0) continue;
    seq.Assign(rank, best);
    used[best] = 1;
    placed.push_back(best);
    for (int i : active) evaluators[i]->Add(best);
  }
  return seq;
}

SlotAssignment GreedyMsrf(std::span<const FunctionBatch> stream, int n_items,
                          bool allow_reuse, const GreedyMsrfOptions& options) {
  if (!allow_reuse && !options.force) {
    throw Error(
        ErrorCode::kConfig,
        "greedy_msrf needs allow_reuse: without reuse no randomized algorithm "
        "guarantees an o(n)-approximation for function-arriving ranking "
        "(it contains online selection). Pass --force for a best-effort run.");
  }
  int last_step = 0;
  int horizon = 0;
  for (const FunctionBatch& batch : stream) {
    if (batch.step <= last_step) {
      throw Error(ErrorCode::kMalformedInput,
                  "function batches must arrive in strictly increasing steps");
    }
    last_step = batch.step;
    for (const Demand& d : batch.demands) {
      if (!d.oracle || d.oracle->universe_size() != n_items) {
        throw Error(ErrorCode::kMalformedInput,
                    "demand oracle universe differs from item count");
      }
      horizon = std::max(horizon, d.budget);
    }
  }

  struct Active {
    const Demand* demand;
    int deadline;
    std::unique_ptr<IncrementalEvaluator> evaluator;
  };
  std::vector<Active> received;
  std::size_t next_batch = 0;

  SlotAssignment seq;
  std::vector<char> used(static_cast<std::size_t>(n_items), 0);
  std::vector<double> gains(static_cast<std::size_t>(n_items));
  std::vector<Active*> active;
  for (int t = 1; t <= horizon; ++t) {
    while (next_batch < stream.size() && stream[next_batch].step <= t) {
      for (const Demand& d : stream[next_batch].demands) {
        received.push_back({&d, d.budget, d.oracle->NewEvaluator()});
      }
      ++next_batch;
    }
    active.clear();
    for (Active& a : received) {
      if (a.deadline >= t) active.push_back(&a);
    }
    ItemId best = -1;
    if (!active.empty()) {
      std::fill(gains.begin(), gains.end(), 0.0);
      for (const Active* a : active) {
        a->evaluator->AccumulateGains(gains, a->demand->weight);
      }
      best = ArgMax(gains, [&](ItemId v) { return allow_reuse || !used[v]; });
    }
    if (best < 0) {
      seq.Assign(t, n_items);  // dummy
      continue;
    }
    seq.Assign(t, best);
    used[best] = 1;
    for (Active* a : active) a->evaluator->Add(best);
  }
  return seq;
}

SlotAssignment GreedyMsrf(const Instance& instance,
                          const GreedyMsrfOptions& options) {
  if (instance.mode != Mode::kMsrf) {
    throw Error(ErrorCode::kConfig,
                "greedy_msrf needs a function-arriving (MSRF) instance, got " +
                    std::string(ModeName(instance.mode)));
  }
  instance.Validate();
  const auto batches = BatchesFromInstance(instance);
  return GreedyMsrf(batches, instance.n_items, instance.allow_reuse, options);
}

}  // namespace msr
