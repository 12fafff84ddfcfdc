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

#ifndef MSR_INSTANCE_H_
#define MSR_INSTANCE_H_

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "nlohmann/json.hpp"
#include "msr/matroid.h"
#include "msr/submodular_oracle.h"
#include "msr/types.h"

namespace msr {

// Problem variant:
//   kMsr  - offline, demand i reads ranks 1..k_i.
//   kMsrf - demands arrive online; demand f reads ranks t(f)..k(f).
//   kMsra - offline, demand i reads its explicit slot set W_i.
//   kMsri - as kMsra, but items are consumed as a one-pass stream.
enum class Mode { kMsr, kMsrf, kMsra, kMsri };

std::string_view ModeName(Mode mode);
// Throws kConfig for an unknown name. Accepts upper or lower case.
Mode ParseMode(std::string_view name);

struct Demand {
  std::shared_ptr<const SubmodularOracle> oracle;
  // k: the last rank this demand reads. In kMsrf it is an absolute step, so
  // a demand arriving after step k reads nothing.
  int budget = 1;
  // t(f): the step at which the demand becomes known; 0 means "from the
  // start" and is read as step 1.
  int arrival = 0;
  // W: explicit slot set; defaults to {1..budget}.
  std::optional<std::vector<Rank>> slots;
  double weight = 1.0;

  int ArrivalStep() const { return arrival < 1 ? 1 : arrival; }
  // Explicit slots (sorted) or 1..budget.
  std::vector<Rank> Slots() const;
  // Ranks the demand reads under `mode`.
  std::vector<Rank> Window(Mode mode) const;
};

struct Instance {
  int n_items = 0;
  std::vector<Demand> demands;
  bool allow_reuse = false;
  // Only for constrained variants; ground set must be the items.
  std::shared_ptr<const ItemMatroid> base_matroid;
  Mode mode = Mode::kMsr;
  // Scenario parameters the instance was generated from, if any. Lets sweeps
  // regenerate it with one parameter changed.
  nlohmann::json generator;

  ItemId dummy() const { return n_items; }

  // Throws kMalformedInstance (or kMalformedInput) on any broken invariant.
  void Validate() const;

  // Highest rank any demand reads under the instance's mode; 0 if none.
  Rank MaxRelevantRank() const;
  // Sorted union of all demand windows.
  std::vector<Rank> RelevantRanks() const;
  // True when every demand window is a prefix 1..k_i.
  bool HasPrefixWindows() const;
};

}  // namespace msr

#endif  // MSR_INSTANCE_H_
