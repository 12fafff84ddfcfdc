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

#ifndef MSR_LIFTED_OBJECTIVE_H_
#define MSR_LIFTED_OBJECTIVE_H_

#include <map>
#include <span>
#include <vector>

#include "msr/instance.h"
#include "msr/types.h"

namespace msr {

// The ranking objective as a set function over (item, rank) pairs:
//   g(S) = Σ_i w_i f_i({v : (v, t) ∈ S, t ∈ W_i}).
class LiftedObjective {
 public:
  // Windows are taken under `mode` (kMsra reads explicit slot sets).
  LiftedObjective(std::vector<Demand> demands, Mode mode);

  const std::vector<Demand>& demands() const { return demands_; }
  const std::vector<std::vector<Rank>>& windows() const { return windows_; }
  // Indices of the demands whose window contains `rank`.
  const std::vector<int>& DemandsAtRank(Rank rank) const;
  // Sorted union of all windows.
  const std::vector<Rank>& ranks() const { return ranks_; }

  double Value(std::span<const ExtendedElement> set) const;
  double Marginal(const ExtendedElement& e,
                  std::span<const ExtendedElement> set) const;

 private:
  std::vector<Demand> demands_;
  std::vector<std::vector<Rank>> windows_;
  std::map<Rank, std::vector<int>> by_rank_;
  std::vector<Rank> ranks_;
};

}  // namespace msr

#endif  // MSR_LIFTED_OBJECTIVE_H_
