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

#include "msr/slot_assignment.h"

#include <algorithm>
#include <set>
#include <string>

#include "msr/error.h"

namespace msr {

SlotAssignment SlotAssignment::FromDense(std::span<const ItemId> items) {
  SlotAssignment seq;
  for (std::size_t i = 0; i < items.size(); ++i) {
    seq.Assign(static_cast<Rank>(i + 1), items[i]);
  }
  return seq;
}

void SlotAssignment::Assign(Rank rank, ItemId item) {
  if (rank < 1) {
    throw Error(ErrorCode::kMalformedSequence,
                "rank " + std::to_string(rank) + " is not >= 1");
  }
  if (item < 0) {
    throw Error(ErrorCode::kMalformedSequence,
                "negative item id " + std::to_string(item));
  }
  entries_[rank] = item;
}

void SlotAssignment::Unassign(Rank rank) { entries_.erase(rank); }

std::optional<ItemId> SlotAssignment::At(Rank rank) const {
  auto it = entries_.find(rank);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Rank SlotAssignment::max_rank() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first;
}

std::vector<ItemId> SlotAssignment::ItemsInWindow(Rank first,
                                                  Rank last) const {
  std::vector<ItemId> out;
  if (first > last) return out;
  for (auto it = entries_.lower_bound(first);
       it != entries_.end() && it->first <= last; ++it) {
    out.push_back(it->second);
  }
  return out;
}

std::vector<ItemId> SlotAssignment::ItemsAtRanks(
    std::span<const Rank> ranks) const {
  std::vector<ItemId> out;
  out.reserve(ranks.size());
  for (Rank r : ranks) {
    auto it = entries_.find(r);
    if (it != entries_.end()) out.push_back(it->second);
  }
  return out;
}

std::vector<ItemId> SlotAssignment::ToDense(ItemId dummy) const {
  std::vector<ItemId> out(static_cast<std::size_t>(max_rank()), dummy);
  for (const auto& [rank, item] : entries_) out[rank - 1] = item;
  return out;
}

std::vector<ExtendedElement> SlotAssignment::ToExtended(ItemId dummy) const {
  std::vector<ExtendedElement> out;
  for (const auto& [rank, item] : entries_) {
    if (item != dummy) out.push_back({item, rank});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SlotAssignment::HasDuplicates(ItemId dummy) const {
  std::set<ItemId> seen;
  for (const auto& [rank, item] : entries_) {
    if (item == dummy) continue;
    if (!seen.insert(item).second) return true;
  }
  return false;
}

void SlotAssignment::CheckNoDuplicates(ItemId dummy) const {
  std::set<ItemId> seen;
  for (const auto& [rank, item] : entries_) {
    if (item == dummy) continue;
    if (!seen.insert(item).second) {
      throw Error(ErrorCode::kConstraintViolation,
                  "item " + std::to_string(item) + " placed twice (rank " +
                      std::to_string(rank) + ")");
    }
  }
}

SlotAssignment ProjectToSequence(std::span<const ExtendedElement> elements) {
  std::set<ItemId> items;
  SlotAssignment seq;
  for (const ExtendedElement& e : elements) {
    if (!items.insert(e.item).second) {
      throw Error(ErrorCode::kConstraintViolation,
                  "item " + std::to_string(e.item) + " appears twice");
    }
    if (seq.At(e.rank).has_value()) {
      throw Error(ErrorCode::kConstraintViolation,
                  "rank " + std::to_string(e.rank) + " appears twice");
    }
    seq.Assign(e.rank, e.item);
  }
  return seq;
}

SlotAssignment CompactForward(const SlotAssignment& sparse, ItemId dummy) {
  SlotAssignment dense;
  Rank next = 1;
  for (const auto& [rank, item] : sparse.entries()) {
    if (item == dummy) continue;
    dense.Assign(next++, item);
  }
  return dense;
}

}  // namespace msr
