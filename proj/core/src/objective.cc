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

#include "msr/objective.h"

#include <string>

#include "msr/error.h"

namespace msr {
namespace {

double DemandValue(const SlotAssignment& seq, const Demand& d, Mode mode) {
  const std::vector<Rank> window = d.Window(mode);
  return d.weight * d.oracle->Value(seq.ItemsAtRanks(window));
}

void CheckArrivals(std::span<const Demand> demands) {
  for (const Demand& d : demands) {
    if (d.arrival < 0) {
      throw Error(ErrorCode::kMalformedInstance,
                  "negative arrival " + std::to_string(d.arrival));
    }
  }
}

double Sum(const SlotAssignment& seq, std::span<const Demand> demands,
           Mode mode) {
  double total = 0.0;
  for (const Demand& d : demands) total += DemandValue(seq, d, mode);
  return total;
}

}  // namespace

double EvalMsr(const SlotAssignment& seq, std::span<const Demand> demands,
               ItemId dummy) {
  seq.CheckNoDuplicates(dummy);
  return Sum(seq, demands, Mode::kMsr);
}

double EvalMsrf(const SlotAssignment& seq, std::span<const Demand> demands) {
  CheckArrivals(demands);
  return Sum(seq, demands, Mode::kMsrf);
}

double EvalMsra(const SlotAssignment& seq, std::span<const Demand> demands,
                ItemId dummy) {
  seq.CheckNoDuplicates(dummy);
  return Sum(seq, demands, Mode::kMsra);
}

std::vector<double> PerDemandValues(const Instance& instance,
                                    const SlotAssignment& seq) {
  if (!instance.allow_reuse) seq.CheckNoDuplicates(instance.dummy());
  if (instance.mode == Mode::kMsrf) CheckArrivals(instance.demands);
  std::vector<double> values;
  values.reserve(instance.demands.size());
  for (const Demand& d : instance.demands) {
    values.push_back(DemandValue(seq, d, instance.mode));
  }
  return values;
}

double Evaluate(const Instance& instance, const SlotAssignment& seq) {
  double total = 0.0;
  for (double v : PerDemandValues(instance, seq)) total += v;
  return total;
}

}  // namespace msr
