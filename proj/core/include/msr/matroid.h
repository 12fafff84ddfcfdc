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

#ifndef MSR_MATROID_H_
#define MSR_MATROID_H_

#include <algorithm>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "msr/types.h"

namespace msr {

// Independence oracle over elements of type E. Sets are passed as spans of
// distinct elements in any order.
template <typename E>
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual bool IsIndependent(std::span<const E> set) const = 0;

  bool CanAdd(std::span<const E> set, const E& e) const {
    std::vector<E> bigger(set.begin(), set.end());
    bigger.push_back(e);
    return IsIndependent(bigger);
  }

  // Members x of an independent `set` such that set - x + e is independent.
  virtual std::vector<E> RestoringElements(std::span<const E> set,
                                           const E& e) const {
    std::vector<E> out;
    std::vector<E> trial(set.begin(), set.end());
    for (std::size_t i = 0; i < set.size(); ++i) {
      trial[i] = e;
      if (IsIndependent(trial)) out.push_back(set[i]);
      trial[i] = set[i];
    }
    return out;
  }
};

// Matroid over the items [0, n). Items outside the ground set throw
// kMalformedInput.
class ItemMatroid : public Matroid<ItemId> {
 public:
  explicit ItemMatroid(int ground_size);

  int ground_size() const { return ground_size_; }
  virtual std::string_view family() const = 0;

 protected:
  void CheckItems(std::span<const ItemId> set) const;

 private:
  int ground_size_;
};

// Independent iff |S| <= cap.
class UniformMatroid final : public ItemMatroid {
 public:
  UniformMatroid(int cap, int ground_size);

  int cap() const { return cap_; }
  bool IsIndependent(std::span<const ItemId> set) const override;
  std::string_view family() const override { return "uniform"; }

 private:
  int cap_;
};

// Independent iff |S ∩ G_l| <= cap_l for every group. Items outside every
// group are unconstrained.
class PartitionMatroid final : public ItemMatroid {
 public:
  PartitionMatroid(std::vector<std::vector<ItemId>> groups,
                   std::vector<int> caps, int ground_size);

  const std::vector<std::vector<ItemId>>& groups() const { return groups_; }
  const std::vector<int>& caps() const { return caps_; }
  bool IsIndependent(std::span<const ItemId> set) const override;
  std::string_view family() const override { return "partition"; }

 private:
  std::vector<std::vector<ItemId>> groups_;
  std::vector<int> caps_;
  std::vector<int> group_of_;  // -1 when ungrouped
};

// Intersection of matroids: independent iff independent in every part. Not a
// matroid in general; it is a p-matroid with p = Components().size().
class MatroidIntersection final : public ItemMatroid {
 public:
  explicit MatroidIntersection(
      std::vector<std::shared_ptr<const ItemMatroid>> parts);

  const std::vector<std::shared_ptr<const ItemMatroid>>& parts() const {
    return parts_;
  }
  bool IsIndependent(std::span<const ItemId> set) const override;
  std::string_view family() const override { return "intersection"; }

 private:
  std::vector<std::shared_ptr<const ItemMatroid>> parts_;
};

// The genuine matroids whose intersection is `m` (nested intersections are
// flattened). A lone matroid yields itself.
std::vector<std::shared_ptr<const ItemMatroid>> MatroidComponents(
    const std::shared_ptr<const ItemMatroid>& m);

}  // namespace msr

#endif  // MSR_MATROID_H_
