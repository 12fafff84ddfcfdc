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

#include "msr/instance.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "msr/error.h"

namespace msr {

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kMsr:
      return "MSR";
    case Mode::kMsrf:
      return "MSRF";
    case Mode::kMsra:
      return "MSRA";
    case Mode::kMsri:
      return "MSRI";
  }
  return "?";
}

Mode ParseMode(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(c));
  if (upper == "MSR") return Mode::kMsr;
  if (upper == "MSRF") return Mode::kMsrf;
  if (upper == "MSRA") return Mode::kMsra;
  if (upper == "MSRI") return Mode::kMsri;
  throw Error(ErrorCode::kConfig, "unknown mode '" + std::string(name) + "'");
}

std::vector<Rank> Demand::Slots() const {
  if (slots.has_value()) {
    std::vector<Rank> w = *slots;
    std::sort(w.begin(), w.end());
    return w;
  }
  std::vector<Rank> w;
  for (Rank r = 1; r <= budget; ++r) w.push_back(r);
  return w;
}

std::vector<Rank> Demand::Window(Mode mode) const {
  switch (mode) {
    case Mode::kMsra:
    case Mode::kMsri:
      return Slots();
    case Mode::kMsrf: {
      std::vector<Rank> w;
      for (Rank r = ArrivalStep(); r <= budget; ++r) w.push_back(r);
      return w;
    }
    case Mode::kMsr:
      break;
  }
  std::vector<Rank> w;
  for (Rank r = 1; r <= budget; ++r) w.push_back(r);
  return w;
}

void Instance::Validate() const {
  if (n_items < 0) {
    throw Error(ErrorCode::kMalformedInstance, "n_items must be >= 0");
  }
  for (std::size_t i = 0; i < demands.size(); ++i) {
    const Demand& d = demands[i];
    const std::string where = "demand " + std::to_string(i) + ": ";
    if (!d.oracle) throw Error(ErrorCode::kMalformedInstance, where + "no oracle");
    if (d.oracle->universe_size() != n_items) {
      throw Error(ErrorCode::kMalformedInstance,
                  where + "oracle universe " +
                      std::to_string(d.oracle->universe_size()) +
                      " != n_items " + std::to_string(n_items));
    }
    if (d.budget < 1) {
      throw Error(ErrorCode::kMalformedInstance, where + "budget must be >= 1");
    }
    if (d.arrival < 0) {
      throw Error(ErrorCode::kMalformedInstance,
                  where + "negative arrival " + std::to_string(d.arrival));
    }
    if (!(d.weight >= 0.0)) {
      throw Error(ErrorCode::kMalformedInstance, where + "negative weight");
    }
    if (d.slots.has_value()) {
      const std::set<Rank> unique(d.slots->begin(), d.slots->end());
      if (unique.size() != d.slots->size()) {
        throw Error(ErrorCode::kMalformedInstance, where + "repeated slot");
      }
      if (!unique.empty() && *unique.begin() < 1) {
        throw Error(ErrorCode::kMalformedInstance, where + "slot < 1");
      }
      if (static_cast<int>(unique.size()) != d.budget) {
        throw Error(ErrorCode::kMalformedInstance,
                    where + "|slots| must equal budget");
      }
    }
  }
  if (base_matroid && base_matroid->ground_size() != n_items) {
    throw Error(ErrorCode::kMalformedInstance,
                "matroid ground set differs from n_items");
  }
}

Rank Instance::MaxRelevantRank() const {
  Rank max_rank = 0;
  for (const Demand& d : demands) {
    const auto w = d.Window(mode);
    if (!w.empty()) max_rank = std::max(max_rank, w.back());
  }
  return max_rank;
}

std::vector<Rank> Instance::RelevantRanks() const {
  std::set<Rank> ranks;
  for (const Demand& d : demands) {
    for (Rank r : d.Window(mode)) ranks.insert(r);
  }
  return {ranks.begin(), ranks.end()};
}

bool Instance::HasPrefixWindows() const {
  for (const Demand& d : demands) {
    const auto w = d.Window(mode);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != static_cast<Rank>(i + 1)) return false;
    }
  }
  return true;
}

}  // namespace msr
