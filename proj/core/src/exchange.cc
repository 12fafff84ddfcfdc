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

#include "msr/exchange.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "msr/error.h"

namespace msr {
namespace {

Rank RankCount(const LiftedObjective& objective) {
  return objective.ranks().empty() ? 1 : objective.ranks().back();
}

}  // namespace

ExchangeState::ExchangeState(std::vector<Demand> demands, Mode mode,
                             int n_items,
                             std::shared_ptr<const ItemMatroid> base,
                             ExchangeOptions options)
    : objective_(std::move(demands), mode),
      matroid_(std::move(base), n_items, RankCount(objective_)),
      options_(options),
      n_items_(n_items) {
  if (!(options_.threshold > 0.0)) {
    throw Error(ErrorCode::kConfig, "exchange threshold must be positive");
  }
  for (const Demand& d : objective_.demands()) {
    if (!d.oracle || d.oracle->universe_size() != n_items) {
      throw Error(ErrorCode::kMalformedInput,
                  "demand oracle universe differs from item count");
    }
    evaluators_.push_back(d.oracle->NewEvaluator());
  }
}

double ExchangeState::Gain(const ExtendedElement& e) const {
  double total = 0.0;
  for (int i : objective_.DemandsAtRank(e.rank)) {
    total += objective_.demands()[i].weight * evaluators_[i]->Gain(e.item);
  }
  return total;
}

bool ExchangeState::TryAction(const ExtendedElement& e, Action* action) const {
  const double gain = Gain(e);
  if (!(gain > 0.0)) return false;
  action->element = e;
  action->gain = gain;
  action->evict.clear();
  action->evicted_weight = 0.0;

  const auto held = item_rank_.find(e.item);
  const auto holder = rank_holder_.find(e.rank);
  bool independent;
  if (matroid_.base() == nullptr) {
    independent = held == item_rank_.end() && holder == rank_holder_.end();
  } else {
    independent = matroid_.CanAdd(elements_, e);
  }
  if (independent) return true;

  std::optional<std::vector<ExtendedElement>> conflicts;
  if (matroid_.base() == nullptr) {
    // One item conflict and one rank conflict at most.
    conflicts.emplace();
    if (held != item_rank_.end()) conflicts->push_back({e.item, held->second});
    if (holder != rank_holder_.end()) conflicts->push_back({holder->second, e.rank});
    std::sort(conflicts->begin(), conflicts->end());
  } else {
    conflicts = EvictionCandidates(matroid_, elements_, e, solution_);
  }
  if (!conflicts.has_value()) return false;
  double evicted_weight = 0.0;
  for (const auto& c : *conflicts) evicted_weight += solution_.at(c);
  if (gain < options_.threshold * evicted_weight) return false;
  if (options_.verify && matroid_.base() == nullptr) {
    const auto reference = EvictionCandidates(matroid_, elements_, e, solution_);
    if (!reference.has_value() || *reference != *conflicts) {
      throw Error(ErrorCode::kContractViolation,
                  "rank-conflict shortcut disagrees with eviction candidates");
    }
  }
  action->evict = std::move(*conflicts);
  action->evicted_weight = evicted_weight;
  return true;
}

void ExchangeState::Process(ItemId item) {
  if (item < 0 || item >= n_items_) {
    throw Error(ErrorCode::kMalformedInput,
                "arriving item " + std::to_string(item) + " out of range");
  }
  ++stats_.arrivals;
  if (item_rank_.count(item) != 0) return;

  bool acted = false;
  Action chosen;
  Action candidate;
  for (Rank t : objective_.ranks()) {
    if (!TryAction({item, t}, &candidate)) continue;
    if (options_.placement == Placement::kBestGain) {
      if (!acted || candidate.gain > chosen.gain) chosen = candidate;
      acted = true;
      continue;
    }
    Commit(candidate);
    acted = true;
    if (options_.placement == Placement::kFirstSuccess) break;
  }
  if (!acted) {
    ++stats_.discarded;
    return;
  }
  if (options_.placement == Placement::kBestGain) Commit(chosen);
}

void ExchangeState::Commit(const Action& action) {
  const double frozen_before = FrozenTotal();
  Apply(action);
  if (options_.verify) Verify(action, frozen_before);
}

void ExchangeState::Apply(const Action& action) {
  std::set<int> dirty;
  for (const auto& c : action.evict) {
    solution_.erase(c);
    rank_holder_.erase(c.rank);
    item_rank_.erase(c.item);
    for (int i : objective_.DemandsAtRank(c.rank)) dirty.insert(i);
  }
  const ExtendedElement& e = action.element;
  solution_[e] = action.gain;
  rank_holder_[e.rank] = e.item;
  item_rank_[e.item] = e.rank;
  elements_.clear();
  for (const auto& [x, w] : solution_) elements_.push_back(x);

  for (int i : objective_.DemandsAtRank(e.rank)) {
    if (dirty.count(i) == 0) evaluators_[i]->Add(e.item);
  }
  std::vector<ItemId> items;
  for (int i : dirty) {
    items.clear();
    for (Rank r : objective_.windows()[i]) {
      auto it = rank_holder_.find(r);
      if (it != rank_holder_.end()) items.push_back(it->second);
    }
    evaluators_[i]->Reset(items);
  }

  if (action.evict.empty()) {
    ++stats_.inserts;
  } else {
    ++stats_.swaps;
    stats_.evicted += action.evict.size();
  }
  stats_.peak_solution_size =
      std::max(stats_.peak_solution_size, solution_.size());
}

void ExchangeState::Verify(const Action& action, double frozen_before) const {
  if (!matroid_.IsIndependent(elements_)) {
    throw Error(ErrorCode::kContractViolation,
                "exchange solution lost independence");
  }
  if (solution_.size() > capacity()) {
    throw Error(ErrorCode::kContractViolation,
                "exchange solution exceeds the relevant rank count");
  }
  if (!action.evict.empty()) {
    if (action.gain < options_.threshold * action.evicted_weight) {
      throw Error(ErrorCode::kContractViolation,
                  "swap admitted below the replacement threshold");
    }
    // new total = old - evicted + gain >= old + (threshold - 1) * evicted.
    if (options_.threshold >= 1.0 &&
        FrozenTotal() < frozen_before - kTolerance) {
      throw Error(ErrorCode::kContractViolation,
                  "frozen weight total decreased at a swap");
    }
  }
  for (const auto& [x, w] : solution_) {
    if (w < 0.0) {
      throw Error(ErrorCode::kContractViolation, "negative frozen weight");
    }
  }
}

std::vector<ExtendedElement> ExchangeState::Elements() const {
  return elements_;
}

double ExchangeState::FrozenTotal() const {
  double total = 0.0;
  for (const auto& [x, w] : solution_) total += w;
  return total;
}

double ExchangeState::LiftedValue() const {
  return objective_.Value(elements_);
}

SlotAssignment ExchangeState::Sequence() const {
  return ProjectToSequence(elements_);
}

SlotAssignment ExchangeMsri(std::span<const ItemId> stream,
                            std::span<const Demand> demands, int n_items,
                            std::shared_ptr<const ItemMatroid> base,
                            const ExchangeOptions& options) {
  ExchangeState state(std::vector<Demand>(demands.begin(), demands.end()),
                      Mode::kMsra, n_items, std::move(base), options);
  for (ItemId v : stream) state.Process(v);
  return state.Sequence();
}

SlotAssignment ExchangeMsri(const Instance& instance,
                            std::span<const ItemId> stream,
                            const ExchangeOptions& options) {
  if (instance.mode == Mode::kMsrf) {
    throw Error(ErrorCode::kConfig,
                "exchange needs an offline or item-arriving instance "
                "(MSR/MSRA/MSRI), got MSRF");
  }
  instance.Validate();
  ExchangeState state(instance.demands, instance.mode, instance.n_items,
                      instance.base_matroid, options);
  if (stream.empty()) {
    for (ItemId v = 0; v < instance.n_items; ++v) state.Process(v);
  } else {
    for (ItemId v : stream) state.Process(v);
  }
  SlotAssignment sparse = state.Sequence();
  if (instance.HasPrefixWindows()) {
    return CompactForward(sparse, instance.dummy());
  }
  return sparse;
}

}  // namespace msr
