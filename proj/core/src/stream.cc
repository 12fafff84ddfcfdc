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

#include "msr/stream.h"

#include <map>
#include <sstream>
#include <string>

#include "msr/error.h"
#include "msr/serialization.h"

namespace msr {

std::vector<StreamEvent> ParseStream(std::istream& in, int n_items) {
  std::vector<StreamEvent> events;
  LoadContext context;
  std::string line;
  int line_no = 0;
  int last_step = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kParse,
                "stream line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line.substr(first));
    std::string tag;
    fields >> tag;
    if (tag == "I") {
      long long item = -1;
      if (!(fields >> item)) fail("expected an item id");
      if (item < 0 || item >= n_items) fail("item id out of range");
      events.push_back(ItemArrival{static_cast<ItemId>(item)});
    } else if (tag == "F") {
      int step = 0;
      if (!(fields >> step) || step < 1) fail("expected a step >= 1");
      std::string rest;
      std::getline(fields, rest);
      Demand demand;
      try {
        demand = DemandFromJson(nlohmann::json::parse(rest), n_items, context);
      } catch (const nlohmann::json::exception& e) {
        fail(std::string("bad demand json: ") + e.what());
      } catch (const Error& e) {
        fail(e.what());
      }
      demand.arrival = step;
      auto* batch = events.empty()
                        ? nullptr
                        : std::get_if<FunctionBatch>(&events.back());
      if (batch != nullptr && batch->step == step) {
        batch->demands.push_back(std::move(demand));
        continue;
      }
      if (step <= last_step) fail("function steps must strictly increase");
      last_step = step;
      events.push_back(FunctionBatch{step, {std::move(demand)}});
    } else {
      fail("unknown event tag '" + tag + "'");
    }
  }
  return events;
}

std::vector<FunctionBatch> BatchesFromInstance(const Instance& instance) {
  std::map<int, std::vector<Demand>> by_step;
  for (const Demand& d : instance.demands) {
    if (d.arrival < 0) {
      throw Error(ErrorCode::kMalformedInstance, "negative arrival");
    }
    by_step[d.ArrivalStep()].push_back(d);
  }
  std::vector<FunctionBatch> batches;
  for (auto& [step, demands] : by_step) {
    batches.push_back(FunctionBatch{step, std::move(demands)});
  }
  return batches;
}

}  // namespace msr
