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

#include "msr/matroid.h"

#include <string>

#include "msr/error.h"

namespace msr {

ItemMatroid::ItemMatroid(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0) {
    throw Error(ErrorCode::kMalformedInput, "negative matroid ground size");
  }
}

void ItemMatroid::CheckItems(std::span<const ItemId> set) const {
  for (ItemId v : set) {
    if (v < 0 || v >= ground_size_) {
      throw Error(ErrorCode::kMalformedInput,
                  "item " + std::to_string(v) +
                      " outside matroid ground set of size " +
                      std::to_string(ground_size_));
    }
  }
}

UniformMatroid::UniformMatroid(int cap, int ground_size)
    : ItemMatroid(ground_size), cap_(cap) {
  if (cap < 0) throw Error(ErrorCode::kMalformedInput, "negative uniform cap");
}

bool UniformMatroid::IsIndependent(std::span<const ItemId> set) const {
  CheckItems(set);
  return static_cast<int>(set.size()) <= cap_;
}

PartitionMatroid::PartitionMatroid(std::vector<std::vector<ItemId>> groups,
                                   std::vector<int> caps, int ground_size)
    : ItemMatroid(ground_size),
      groups_(std::move(groups)),
      caps_(std::move(caps)),
      group_of_(static_cast<std::size_t>(ground_size), -1) {
  if (groups_.size() != caps_.size()) {
    throw Error(ErrorCode::kMalformedInput,
                "partition matroid needs one cap per group");
  }
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (caps_[g] < 0) {
      throw Error(ErrorCode::kMalformedInput, "negative partition cap");
    }
    CheckItems(groups_[g]);
    for (ItemId v : groups_[g]) {
      if (group_of_[v] != -1 && group_of_[v] != static_cast<int>(g)) {
        throw Error(ErrorCode::kMalformedInput,
                    "partition groups overlap at item " + std::to_string(v));
      }
      group_of_[v] = static_cast<int>(g);
    }
  }
}

bool PartitionMatroid::IsIndependent(std::span<const ItemId> set) const {
  CheckItems(set);
  std::vector<int> used(groups_.size(), 0);
  for (ItemId v : set) {
    const int g = group_of_[v];
    if (g >= 0 && ++used[g] > caps_[g]) return false;
  }
  return true;
}

MatroidIntersection::MatroidIntersection(
    std::vector<std::shared_ptr<const ItemMatroid>> parts)
    : ItemMatroid(parts.empty() ? 0 : parts.front()->ground_size()),
      parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw Error(ErrorCode::kMalformedInput, "intersection has no parts");
  }
  for (const auto& p : parts_) {
    if (!p || p->ground_size() != ground_size()) {
      throw Error(ErrorCode::kMalformedInput,
                  "intersection parts disagree on ground set");
    }
  }
}

bool MatroidIntersection::IsIndependent(std::span<const ItemId> set) const {
  CheckItems(set);
  for (const auto& p : parts_) {
    if (!p->IsIndependent(set)) return false;
  }
  return true;
}

std::vector<std::shared_ptr<const ItemMatroid>> MatroidComponents(
    const std::shared_ptr<const ItemMatroid>& m) {
  std::vector<std::shared_ptr<const ItemMatroid>> out;
  if (!m) return out;
  if (const auto* inter = dynamic_cast<const MatroidIntersection*>(m.get())) {
    for (const auto& p : inter->parts()) {
      auto sub = MatroidComponents(p);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  } else {
    out.push_back(m);
  }
  return out;
}

}  // namespace msr
