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

#ifndef MSR_RANK_EXTENDED_MATROID_H_
#define MSR_RANK_EXTENDED_MATROID_H_

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "msr/matroid.h"
#include "msr/types.h"

namespace msr {

using LiftedMatroid = Matroid<ExtendedElement>;

// Over (item, rank) pairs: each item used at most once and, when a base
// matroid M_j is given, the projected item set independent in M_j. With no
// base this is the "each item once" partition matroid alone.
class LiftedItemComponent final : public LiftedMatroid {
 public:
  LiftedItemComponent(std::shared_ptr<const ItemMatroid> base, int n_items);

  const ItemMatroid* base() const { return base_.get(); }
  bool IsIndependent(std::span<const ExtendedElement> set) const override;
  std::vector<ExtendedElement> RestoringElements(
      std::span<const ExtendedElement> set,
      const ExtendedElement& e) const override;

 private:
  std::shared_ptr<const ItemMatroid> base_;
  int n_items_;
};

// Each rank holds at most one item.
class RankComponent final : public LiftedMatroid {
 public:
  bool IsIndependent(std::span<const ExtendedElement> set) const override;
  std::vector<ExtendedElement> RestoringElements(
      std::span<const ExtendedElement> set,
      const ExtendedElement& e) const override;
};

// A ranking as an independent set of the lifted universe items x ranks: the
// intersection of one LiftedItemComponent per base component (or a single
// unconstrained one) and the RankComponent. Its component count is k + 1 for
// a k-matroid base and 2 without a base.
class RankExtendedMatroid final : public LiftedMatroid {
 public:
  RankExtendedMatroid(std::shared_ptr<const ItemMatroid> base, int n_items,
                      int n_ranks);

  int n_items() const { return n_items_; }
  int n_ranks() const { return n_ranks_; }
  const std::shared_ptr<const ItemMatroid>& base() const { return base_; }
  const std::vector<std::shared_ptr<const LiftedMatroid>>& components() const {
    return components_;
  }
  int p_total() const { return static_cast<int>(components_.size()); }

  // Throws kMalformedInput for an element outside the lifted ground set.
  void CheckElement(const ExtendedElement& e) const;
  bool IsIndependent(std::span<const ExtendedElement> set) const override;

  std::vector<ExtendedElement> GroundSet() const;

 private:
  std::shared_ptr<const ItemMatroid> base_;
  int n_items_;
  int n_ranks_;
  std::vector<std::shared_ptr<const LiftedMatroid>> components_;
};

// Builds the lifted matroid. `base` may be null. Throws kMalformedInput when
// n_ranks <= 0 or the base ground set is not n_items.
RankExtendedMatroid Extend(std::shared_ptr<const ItemMatroid> base,
                           int n_items, int n_ranks);

// For an independent `set` and an element `e` whose addition breaks
// independence, picks in every violated component the lowest-weight member of
// `set` whose removal repairs that component (ties: smallest (item, rank)).
// Returns the union of those picks, or nullopt when some violated component
// cannot be repaired by a single removal. Throws kContractViolation if set + e
// is already independent.
std::optional<std::vector<ExtendedElement>> EvictionCandidates(
    const RankExtendedMatroid& m, std::span<const ExtendedElement> set,
    const ExtendedElement& e,
    const std::map<ExtendedElement, double>& weights);

}  // namespace msr

#endif  // MSR_RANK_EXTENDED_MATROID_H_
