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

#ifndef MSR_SERIALIZATION_H_
#define MSR_SERIALIZATION_H_

#include <filesystem>
#include <map>
#include <memory>
#include <string>

#include "nlohmann/json.hpp"
#include "msr/functions.h"
#include "msr/instance.h"
#include "msr/matroid.h"
#include "msr/slot_assignment.h"

namespace msr {

using Json = nlohmann::json;

// State shared while reading one document: where relative file references
// resolve, and graphs already loaded (so demands over one network share it).
struct LoadContext {
  std::filesystem::path base_dir;
  std::map<std::string, std::shared_ptr<const Graph>> graphs;
};

// Function descriptors:
//   {"type":"coverage","target":[...]}
//   {"type":"modular","weights":{"<id>":w,...}}      (or a dense array)
//   {"type":"neighborhood","edges":[[u,v],...],"group":[...],
//    "open_neighborhood":false}                      (or "edges_file":path)
//   {"type":"divrel","rel":[...],"sim":[[...],...],"lambda":x,"k":n,
//    "base":[...]}                                   (or "sim_file":path)
//   {"type":"weighted_sum","components":[{"weight":w,"oracle":{...}},...]}
// A divrel "sim" has either one row per item (a full matrix) or one row per
// base element. Negative rel/sim entries are clamped to 0 with a warning.
Json OracleToJson(const SubmodularOracle& oracle);
std::shared_ptr<const SubmodularOracle> OracleFromJson(const Json& j,
                                                       int n_items,
                                                       LoadContext& context);

// {"type":"uniform","cap":k}, {"type":"partition","groups":[[..]],"caps":[..]},
// {"type":"intersection","parts":[...]}.
Json MatroidToJson(const ItemMatroid& matroid);
std::shared_ptr<const ItemMatroid> MatroidFromJson(const Json& j, int n_items);

// {"type":..., "params":{...}, "budget":k, "arrival":t, "slots":[...]|null,
//  "weight":w}. Function fields may also sit at the top level instead of
// under "params".
Json DemandToJson(const Demand& demand);
Demand DemandFromJson(const Json& j, int n_items, LoadContext& context);

// {"n_items", "allow_reuse", "mode", "demands", "matroid"?, "generator"?}.
// Throws kParse for missing or mistyped fields.
Json InstanceToJson(const Instance& instance);
Instance InstanceFromJson(const Json& j, LoadContext& context);
Instance InstanceFromJson(const Json& j);

Instance LoadInstance(const std::filesystem::path& path);
void SaveInstance(const Instance& instance, const std::filesystem::path& path);

// Array indexed by rank - 1; unassigned ranks and dummies are null.
Json SequenceToJson(const SlotAssignment& seq, ItemId dummy);
SlotAssignment SequenceFromJson(const Json& j);

// Reads a whitespace edge list "u v" per line ('#' comments allowed). When
// every label is a non-negative integer the labels are the node ids and the
// node count is max + 1 (or `min_nodes` if larger); otherwise labels are
// numbered in order of first appearance.
struct EdgeList {
  int num_nodes = 0;
  std::vector<std::pair<ItemId, ItemId>> edges;
  std::vector<std::string> labels;  // only for non-integer labels
};
EdgeList ReadEdgeList(const std::filesystem::path& path, int min_nodes = 0);

// Whitespace matrix reader: one row per line.
std::vector<std::vector<double>> ReadMatrix(const std::filesystem::path& path);

}  // namespace msr

#endif  // MSR_SERIALIZATION_H_
