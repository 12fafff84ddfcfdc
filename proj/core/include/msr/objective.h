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

#ifndef MSR_OBJECTIVE_H_
#define MSR_OBJECTIVE_H_

#include <span>
#include <vector>

#include "msr/instance.h"
#include "msr/slot_assignment.h"

namespace msr {

// Σ_i w_i f_i(σ[1 : k_i]). Throws kConstraintViolation if a non-dummy item is
// placed twice.
double EvalMsr(const SlotAssignment& seq, std::span<const Demand> demands,
               ItemId dummy);

// Σ_f w_f f(σ[t(f) : k(f)]); repeats allowed. A window with t(f) > k(f) is
// empty. Throws kMalformedInstance on a negative arrival.
double EvalMsrf(const SlotAssignment& seq, std::span<const Demand> demands);

// Σ_i w_i f_i(σ[W_i]); unassigned slots contribute nothing. Same duplicate
// rule as EvalMsr.
double EvalMsra(const SlotAssignment& seq, std::span<const Demand> demands,
                ItemId dummy);

// Weighted per-demand values under the instance's mode. Duplicates are
// rejected unless the instance allows reuse.
std::vector<double> PerDemandValues(const Instance& instance,
                                    const SlotAssignment& seq);

// The instance objective; equals the in-order sum of PerDemandValues.
double Evaluate(const Instance& instance, const SlotAssignment& seq);

}  // namespace msr

#endif  // MSR_OBJECTIVE_H_
