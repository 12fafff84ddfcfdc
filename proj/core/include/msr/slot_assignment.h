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

#ifndef MSR_SLOT_ASSIGNMENT_H_
#define MSR_SLOT_ASSIGNMENT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "msr/types.h"

namespace msr {

// A partial map from 1-based ranks to items: the output ranking. Unassigned
// ranks and ranks holding the dummy sentinel both mean "nothing placed".
class SlotAssignment {
 public:
  SlotAssignment() = default;

  // Rank i+1 gets items[i].
  static SlotAssignment FromDense(std::span<const ItemId> items);

  // Throws kMalformedSequence when rank < 1.
  void Assign(Rank rank, ItemId item);
  void Unassign(Rank rank);

  std::optional<ItemId> At(Rank rank) const;

  // Highest assigned rank, 0 when empty.
  Rank max_rank() const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<Rank, ItemId>& entries() const { return entries_; }

  // Items at ranks first..last inclusive, in rank order; may contain
  // repeats and dummies.
  std::vector<ItemId> ItemsInWindow(Rank first, Rank last) const;
  // Items at the given ranks that are assigned, in the order of `ranks`.
  std::vector<ItemId> ItemsAtRanks(std::span<const Rank> ranks) const;

  // Dense view up to max_rank(); unassigned ranks become `dummy`.
  std::vector<ItemId> ToDense(ItemId dummy) const;

  // The (item, rank) set of all non-dummy entries, sorted.
  std::vector<ExtendedElement> ToExtended(ItemId dummy) const;

  // Throws kConstraintViolation if a non-dummy item occupies two ranks.
  void CheckNoDuplicates(ItemId dummy) const;
  bool HasDuplicates(ItemId dummy) const;

  friend bool operator==(const SlotAssignment&,
                         const SlotAssignment&) = default;

 private:
  std::map<Rank, ItemId> entries_;
};

// Orders the items of a lifted set by their ranks. Throws
// kConstraintViolation if an item or a rank appears twice.
SlotAssignment ProjectToSequence(std::span<const ExtendedElement> elements);

// Shifts items forward so the non-dummy entries occupy ranks 1..m in their
// original order. Under prefix windows this never lowers the objective.
SlotAssignment CompactForward(const SlotAssignment& sparse, ItemId dummy);

}  // namespace msr

#endif  // MSR_SLOT_ASSIGNMENT_H_
