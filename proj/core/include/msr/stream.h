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

#ifndef MSR_STREAM_H_
#define MSR_STREAM_H_

#include <istream>
#include <variant>
#include <vector>

#include "msr/instance.h"
#include "msr/types.h"

namespace msr {

// Demands revealed at the start of `step`.
struct FunctionBatch {
  int step = 1;
  std::vector<Demand> demands;
};

struct ItemArrival {
  ItemId item = 0;
};

using StreamEvent = std::variant<FunctionBatch, ItemArrival>;

// Reads newline-delimited events:
//   F <step> <demand-json>
//   I <item-id>
// Blank lines and lines starting with '#' are skipped. Consecutive F lines
// with the same step form one batch; steps must strictly increase between
// batches. Throws kParse with the line number on bad input.
std::vector<StreamEvent> ParseStream(std::istream& in, int n_items);

// Groups an instance's demands into batches by arrival step.
std::vector<FunctionBatch> BatchesFromInstance(const Instance& instance);

}  // namespace msr

#endif  // MSR_STREAM_H_
