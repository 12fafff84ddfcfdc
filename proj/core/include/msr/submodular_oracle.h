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

#ifndef MSR_SUBMODULAR_ORACLE_H_
#define MSR_SUBMODULAR_ORACLE_H_

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "msr/types.h"

namespace msr {

class SubmodularOracle;

// Mutable view of f restricted to a growing set S: answers f(v | S) and
// accepts new members. Owned by a single algorithm run.
class IncrementalEvaluator {
 public:
  virtual ~IncrementalEvaluator() = default;

  // f(v | S); zero for the dummy and for members of S.
  virtual double Gain(ItemId v) const = 0;
  virtual void Add(ItemId v) = 0;
  virtual void Clear() = 0;
  // f(S).
  virtual double value() const = 0;

  void Reset(std::span<const ItemId> items);

  // gains[v] += weight * f(v | S) for every real item v. Families with sparse
  // support override this to touch only the items that can gain.
  virtual void AccumulateGains(std::span<double> gains, double weight) const;
};

// Value oracle for a normalized, non-decreasing submodular set function over
// the items [0, n). Item id n is the dummy and is ignored; ids outside [0, n]
// throw kMalformedInput. Implementations are immutable.
class SubmodularOracle {
 public:
  explicit SubmodularOracle(int universe_size);
  virtual ~SubmodularOracle() = default;

  int universe_size() const { return universe_size_; }
  ItemId dummy() const { return universe_size_; }

  // f(S). `items` is read as a set: repeats and dummies are dropped.
  double Value(std::span<const ItemId> items) const;
  // f(v | S) = f(S + v) - f(S).
  double Marginal(ItemId v, std::span<const ItemId> items) const;

  virtual std::unique_ptr<IncrementalEvaluator> NewEvaluator() const;
  virtual std::string_view family() const = 0;

  // Sorted, deduplicated, dummy-free copy of `items`; validates ids.
  std::vector<ItemId> Canonicalize(std::span<const ItemId> items) const;
  void CheckItem(ItemId v) const;

  // Both take a canonical set.
  virtual double SetValue(std::span<const ItemId> set) const = 0;
  virtual double SetMarginal(ItemId v, std::span<const ItemId> set) const;

 private:
  int universe_size_;
};

}  // namespace msr

#endif  // MSR_SUBMODULAR_ORACLE_H_
