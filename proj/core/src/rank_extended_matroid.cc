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

#include "msr/rank_extended_matroid.h"

#include <algorithm>
#include <set>
#include <string>

#include "msr/error.h"

namespace msr {
namespace {

bool HasRepeatedItem(std::span<const ExtendedElement> set) {
  std::vector<ItemId> items;
  items.reserve(set.size());
  for (const auto& e : set) items.push_back(e.item);
  std::sort(items.begin(), items.end());
  return std::adjacent_find(items.begin(), items.end()) != items.end();
}

std::vector<ItemId> Projection(std::span<const ExtendedElement> set) {
  std::vector<ItemId> items;
  items.reserve(set.size());
  for (const auto& e : set) items.push_back(e.item);
  return items;
}

}  // namespace

LiftedItemComponent::LiftedItemComponent(std::shared_ptr<const ItemMatroid> base,
                                         int n_items)
    : base_(std::move(base)), n_items_(n_items) {}

bool LiftedItemComponent::IsIndependent(
    std::span<const ExtendedElement> set) const {
  if (HasRepeatedItem(set)) return false;
  return base_ == nullptr || base_->IsIndependent(Projection(set));
}

std::vector<ExtendedElement> LiftedItemComponent::RestoringElements(
    std::span<const ExtendedElement> set, const ExtendedElement& e) const {
  // If e repeats an item, only the holder of that item can make room; the
  // projection is unchanged by the swap, so it stays independent.
  for (const auto& x : set) {
    if (x.item == e.item) return {x};
  }
  if (base_ == nullptr) return {};
  return LiftedMatroid::RestoringElements(set, e);
}

bool RankComponent::IsIndependent(std::span<const ExtendedElement> set) const {
  std::vector<Rank> ranks;
  ranks.reserve(set.size());
  for (const auto& e : set) ranks.push_back(e.rank);
  std::sort(ranks.begin(), ranks.end());
  return std::adjacent_find(ranks.begin(), ranks.end()) == ranks.end();
}

std::vector<ExtendedElement> RankComponent::RestoringElements(
    std::span<const ExtendedElement> set, const ExtendedElement& e) const {
  for (const auto& x : set) {
    if (x.rank == e.rank) return {x};
  }
  return {};
}

RankExtendedMatroid::RankExtendedMatroid(std::shared_ptr<const ItemMatroid> base,
                                         int n_items, int n_ranks)
    : base_(std::move(base)), n_items_(n_items), n_ranks_(n_ranks) {
  if (n_ranks <= 0) {
    throw Error(ErrorCode::kMalformedInput,
                "lifted matroid needs n_ranks > 0, got " +
                    std::to_string(n_ranks));
  }
  if (n_items < 0) {
    throw Error(ErrorCode::kMalformedInput, "negative item count");
  }
  if (base_ && base_->ground_size() != n_items) {
    throw Error(ErrorCode::kMalformedInput,
                "base matroid ground set size " +
                    std::to_string(base_->ground_size()) +
                    " differs from item count " + std::to_string(n_items));
  }
  const auto parts = MatroidComponents(base_);
  if (parts.empty()) {
    components_.push_back(std::make_shared<LiftedItemComponent>(nullptr, n_items));
  } else {
    for (const auto& p : parts) {
      components_.push_back(std::make_shared<LiftedItemComponent>(p, n_items));
    }
  }
  components_.push_back(std::make_shared<RankComponent>());
}

void RankExtendedMatroid::CheckElement(const ExtendedElement& e) const {
  if (e.item < 0 || e.item >= n_items_ || e.rank < 1 || e.rank > n_ranks_) {
    throw Error(ErrorCode::kMalformedInput,
                "element (" + std::to_string(e.item) + ", " +
                    std::to_string(e.rank) + ") outside lifted ground set " +
                    std::to_string(n_items_) + " x " +
                    std::to_string(n_ranks_));
  }
}

bool RankExtendedMatroid::IsIndependent(
    std::span<const ExtendedElement> set) const {
  for (const auto& e : set) CheckElement(e);
  for (const auto& c : components_) {
    if (!c->IsIndependent(set)) return false;
  }
  return true;
}

std::vector<ExtendedElement> RankExtendedMatroid::GroundSet() const {
  std::vector<ExtendedElement> out;
  for (ItemId v = 0; v < n_items_; ++v) {
    for (Rank t = 1; t <= n_ranks_; ++t) out.push_back({v, t});
  }
  return out;
}

RankExtendedMatroid Extend(std::shared_ptr<const ItemMatroid> base,
                           int n_items, int n_ranks) {
  return RankExtendedMatroid(std::move(base), n_items, n_ranks);
}

std::optional<std::vector<ExtendedElement>> EvictionCandidates(
    const RankExtendedMatroid& m, std::span<const ExtendedElement> set,
    const ExtendedElement& e,
    const std::map<ExtendedElement, double>& weights) {
  m.CheckElement(e);
  std::vector<ExtendedElement> with_e(set.begin(), set.end());
  with_e.push_back(e);
  if (m.IsIndependent(with_e)) {
    throw Error(ErrorCode::kContractViolation,
                "eviction requested but the insertion is already independent");
  }
  auto weight_of = [&](const ExtendedElement& x) {
    auto it = weights.find(x);
    if (it == weights.end()) {
      throw Error(ErrorCode::kContractViolation,
                  "no frozen weight for (" + std::to_string(x.item) + ", " +
                      std::to_string(x.rank) + ")");
    }
    return it->second;
  };
  std::set<ExtendedElement> picks;
  for (const auto& component : m.components()) {
    if (component->IsIndependent(with_e)) continue;
    const auto restoring = component->RestoringElements(set, e);
    if (restoring.empty()) return std::nullopt;
    const ExtendedElement* best = nullptr;
    double best_weight = 0.0;
    for (const auto& x : restoring) {
      const double w = weight_of(x);
      if (best == nullptr || w < best_weight ||
          (w == best_weight && x < *best)) {
        best = &x;
        best_weight = w;
      }
    }
    picks.insert(*best);
  }
  return std::vector<ExtendedElement>(picks.begin(), picks.end());
}

}  // namespace msr
