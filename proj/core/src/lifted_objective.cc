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

#include "msr/lifted_objective.h"

#include <algorithm>

namespace msr {

LiftedObjective::LiftedObjective(std::vector<Demand> demands, Mode mode)
    : demands_(std::move(demands)) {
  windows_.reserve(demands_.size());
  for (std::size_t i = 0; i < demands_.size(); ++i) {
    windows_.push_back(demands_[i].Window(mode));
    for (Rank r : windows_.back()) by_rank_[r].push_back(static_cast<int>(i));
  }
  for (const auto& [rank, ids] : by_rank_) ranks_.push_back(rank);
}

const std::vector<int>& LiftedObjective::DemandsAtRank(Rank rank) const {
  static const std::vector<int> kNone;
  auto it = by_rank_.find(rank);
  return it == by_rank_.end() ? kNone : it->second;
}

double LiftedObjective::Value(std::span<const ExtendedElement> set) const {
  double total = 0.0;
  std::vector<ItemId> items;
  for (std::size_t i = 0; i < demands_.size(); ++i) {
    const auto& window = windows_[i];
    items.clear();
    for (const auto& e : set) {
      if (std::binary_search(window.begin(), window.end(), e.rank)) {
        items.push_back(e.item);
      }
    }
    total += demands_[i].weight * demands_[i].oracle->Value(items);
  }
  return total;
}

double LiftedObjective::Marginal(const ExtendedElement& e,
                                 std::span<const ExtendedElement> set) const {
  if (std::find(set.begin(), set.end(), e) != set.end()) return 0.0;
  double total = 0.0;
  std::vector<ItemId> items;
  for (int i : DemandsAtRank(e.rank)) {
    const auto& window = windows_[i];
    items.clear();
    for (const auto& x : set) {
      if (std::binary_search(window.begin(), window.end(), x.rank)) {
        items.push_back(x.item);
      }
    }
    total += demands_[i].weight * demands_[i].oracle->Marginal(e.item, items);
  }
  return total;
}

}  // namespace msr
