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

#include "msr/brute_force.h"

#include <algorithm>
#include <string>
#include <vector>

#include "msr/error.h"
#include "msr/objective.h"

namespace msr {
namespace {

class Search {
 public:
  explicit Search(const Instance& instance)
      : instance_(instance), ranks_(instance.RelevantRanks()) {
    const int n = instance.n_items;
    const std::size_t masks = std::size_t{1} << n;
    // A demand's value depends only on the item set in its window, so it is
    // tabulated once per subset.
    std::vector<ItemId> items;
    for (const Demand& d : instance.demands) {
      std::vector<double> table(masks);
      for (std::size_t mask = 0; mask < masks; ++mask) {
        items.clear();
        for (ItemId v = 0; v < n; ++v) {
          if (mask >> v & 1) items.push_back(v);
        }
        table[mask] = d.weight * d.oracle->Value(items);
      }
      tables_.push_back(std::move(table));
      const std::vector<Rank> window = d.Window(instance.mode);
      std::vector<bool> reads(ranks_.size(), false);
      for (std::size_t r = 0; r < ranks_.size(); ++r) {
        reads[r] = std::binary_search(window.begin(), window.end(), ranks_[r]);
      }
      reads_.push_back(std::move(reads));
    }
    masks_.assign(instance.demands.size(), 0);
    choice_.assign(ranks_.size(), instance.dummy());
  }

  OptResult Run() {
    Recurse(0);
    OptResult result;
    for (std::size_t r = 0; r < ranks_.size(); ++r) {
      if (best_[r] != instance_.dummy()) {
        result.opt_sequence.Assign(ranks_[r], best_[r]);
      }
    }
    result.opt_value = Evaluate(instance_, result.opt_sequence);
    result.search_space_size = leaves_;
    return result;
  }

 private:
  void Recurse(std::size_t depth) {
    if (depth == ranks_.size()) {
      ++leaves_;
      double value = 0.0;
      for (std::size_t i = 0; i < tables_.size(); ++i) {
        value += tables_[i][masks_[i]];
      }
      if (leaves_ == 1 || value > best_value_) {
        best_value_ = value;
        best_ = choice_;
      }
      return;
    }
    for (ItemId v = 0; v <= instance_.n_items; ++v) {
      const bool dummy = v == instance_.dummy();
      const bool held = !dummy && (used_ >> v & 1);
      if (held && !instance_.allow_reuse) continue;
      if (!dummy && !held && instance_.base_matroid) {
        chosen_.push_back(v);
        const bool ok = instance_.base_matroid->IsIndependent(chosen_);
        chosen_.pop_back();
        if (!ok) continue;
      }
      const std::vector<std::uint32_t> saved = masks_;
      const std::uint32_t saved_used = used_;
      if (!dummy) {
        for (std::size_t i = 0; i < masks_.size(); ++i) {
          if (reads_[i][depth]) masks_[i] |= 1u << v;
        }
        if (!held) chosen_.push_back(v);
        used_ |= 1u << v;
      }
      choice_[depth] = v;
      Recurse(depth + 1);
      if (!dummy && !held) chosen_.pop_back();
      masks_ = saved;
      used_ = saved_used;
    }
    choice_[depth] = instance_.dummy();
  }

  const Instance& instance_;
  std::vector<Rank> ranks_;
  std::vector<std::vector<double>> tables_;
  std::vector<std::vector<bool>> reads_;
  std::vector<std::uint32_t> masks_;
  std::uint32_t used_ = 0;
  std::vector<ItemId> chosen_;
  std::vector<ItemId> choice_;
  std::vector<ItemId> best_;
  double best_value_ = 0.0;
  std::int64_t leaves_ = 0;
};

}  // namespace

OptResult BruteForce(const Instance& instance) {
  instance.Validate();
  if (instance.n_items > kBruteForceMaxItems) {
    throw Error(ErrorCode::kTooLarge,
                "brute force is limited to " +
                    std::to_string(kBruteForceMaxItems) + " items, got " +
                    std::to_string(instance.n_items));
  }
  if (instance.MaxRelevantRank() > kBruteForceMaxRank) {
    throw Error(ErrorCode::kTooLarge,
                "brute force is limited to rank " +
                    std::to_string(kBruteForceMaxRank) + ", instance reads rank " +
                    std::to_string(instance.MaxRelevantRank()));
  }
  return Search(instance).Run();
}

}  // namespace msr
