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

#include "msr/submodular_oracle.h"

#include <algorithm>
#include <string>

#include "msr/error.h"

namespace msr {
namespace {

// Fallback evaluator that keeps S explicitly and asks the oracle.
class GenericEvaluator : public IncrementalEvaluator {
 public:
  explicit GenericEvaluator(const SubmodularOracle& oracle)
      : oracle_(oracle) {}

  double Gain(ItemId v) const override {
    if (v == oracle_.dummy()) return 0.0;
    if (std::binary_search(set_.begin(), set_.end(), v)) return 0.0;
    return oracle_.SetMarginal(v, set_);
  }

  void Add(ItemId v) override {
    oracle_.CheckItem(v);
    if (v == oracle_.dummy()) return;
    auto it = std::lower_bound(set_.begin(), set_.end(), v);
    if (it != set_.end() && *it == v) return;
    set_.insert(it, v);
    value_ = oracle_.SetValue(set_);
  }

  void Clear() override {
    set_.clear();
    value_ = 0.0;
  }

  double value() const override { return value_; }

 private:
  const SubmodularOracle& oracle_;
  std::vector<ItemId> set_;
  double value_ = 0.0;
};

}  // namespace

void IncrementalEvaluator::Reset(std::span<const ItemId> items) {
  Clear();
  for (ItemId v : items) Add(v);
}

void IncrementalEvaluator::AccumulateGains(std::span<double> gains,
                                           double weight) const {
  for (std::size_t v = 0; v < gains.size(); ++v) {
    const double g = Gain(static_cast<ItemId>(v));
    if (g != 0.0) gains[v] += weight * g;
  }
}

SubmodularOracle::SubmodularOracle(int universe_size)
    : universe_size_(universe_size) {
  if (universe_size < 0) {
    throw Error(ErrorCode::kMalformedInput, "negative universe size");
  }
}

void SubmodularOracle::CheckItem(ItemId v) const {
  if (v < 0 || v > universe_size_) {
    throw Error(ErrorCode::kMalformedInput,
                "item id " + std::to_string(v) + " outside universe of size " +
                    std::to_string(universe_size_));
  }
}

std::vector<ItemId> SubmodularOracle::Canonicalize(
    std::span<const ItemId> items) const {
  std::vector<ItemId> set;
  set.reserve(items.size());
  for (ItemId v : items) {
    CheckItem(v);
    if (v != dummy()) set.push_back(v);
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

double SubmodularOracle::Value(std::span<const ItemId> items) const {
  return SetValue(Canonicalize(items));
}

double SubmodularOracle::Marginal(ItemId v,
                                  std::span<const ItemId> items) const {
  CheckItem(v);
  const std::vector<ItemId> set = Canonicalize(items);
  if (v == dummy() || std::binary_search(set.begin(), set.end(), v)) {
    return 0.0;
  }
  return SetMarginal(v, set);
}

double SubmodularOracle::SetMarginal(ItemId v,
                                     std::span<const ItemId> set) const {
  std::vector<ItemId> bigger(set.begin(), set.end());
  bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), v), v);
  return SetValue(bigger) - SetValue(set);
}

std::unique_ptr<IncrementalEvaluator> SubmodularOracle::NewEvaluator() const {
  return std::make_unique<GenericEvaluator>(*this);
}

}  // namespace msr
