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

#include "msr/serialization.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "msr/error.h"
#include "msr/logging.h"

namespace msr {
namespace {

[[noreturn]] void ParseError(const std::string& message) {
  throw Error(ErrorCode::kParse, message);
}

const Json& Require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T As(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    ParseError(std::string("field '") + what + "': " + e.what());
  }
}

template <typename T>
T Field(const Json& j, const char* key) {
  return As<T>(Require(j, key), key);
}

template <typename T>
T FieldOr(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) {
    return fallback;
  }
  return As<T>(j.at(key), key);
}

std::filesystem::path Resolve(const LoadContext& context,
                              const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative() && !context.base_dir.empty()) return context.base_dir / p;
  return p;
}

double ClampNonNegative(double x, bool* clamped) {
  if (x < 0.0) {
    *clamped = true;
    return 0.0;
  }
  return x;
}

std::shared_ptr<const Graph> GraphFor(const Json& params, int n_items,
                                      LoadContext& context) {
  if (params.contains("edges_file")) {
    const std::string path = Field<std::string>(params, "edges_file");
    const std::string key = Resolve(context, path).string();
    auto it = context.graphs.find(key);
    if (it != context.graphs.end()) return it->second;
    EdgeList list = ReadEdgeList(key, n_items);
    if (list.num_nodes != n_items) {
      ParseError("edges_file " + path + " has " +
                 std::to_string(list.num_nodes) + " nodes, expected " +
                 std::to_string(n_items));
    }
    auto graph = std::make_shared<Graph>(Graph::FromEdges(n_items, list.edges));
    graph->source_path = path;
    context.graphs.emplace(key, graph);
    return graph;
  }
  const auto raw = Field<std::vector<std::vector<ItemId>>>(params, "edges");
  std::vector<std::pair<ItemId, ItemId>> edges;
  for (const auto& e : raw) {
    if (e.size() != 2) ParseError("an edge must have two endpoints");
    edges.emplace_back(e[0], e[1]);
  }
  return std::make_shared<Graph>(Graph::FromEdges(n_items, edges));
}

}  // namespace

// ---------------------------------------------------------------------------

Json OracleToJson(const SubmodularOracle& oracle) {
  if (const auto* f = dynamic_cast<const CoverageFunction*>(&oracle)) {
    return {{"type", "coverage"}, {"target", f->target()}};
  }
  if (const auto* f = dynamic_cast<const ModularFunction*>(&oracle)) {
    Json weights = Json::object();
    for (std::size_t v = 0; v < f->weights().size(); ++v) {
      if (f->weights()[v] != 0.0) weights[std::to_string(v)] = f->weights()[v];
    }
    return {{"type", "modular"}, {"weights", weights}};
  }
  if (const auto* f = dynamic_cast<const NeighborhoodCoverage*>(&oracle)) {
    Json j = {{"type", "neighborhood"},
              {"group", f->group()},
              {"open_neighborhood", f->open_neighborhood()}};
    if (f->graph().source_path.has_value()) {
      j["edges_file"] = *f->graph().source_path;
    } else {
      Json edges = Json::array();
      for (const auto& [u, v] : f->graph().Edges()) edges.push_back({u, v});
      j["edges"] = edges;
    }
    return j;
  }
  if (const auto* f = dynamic_cast<const DiversityRelevance*>(&oracle)) {
    return {{"type", "divrel"},     {"rel", f->relevance()},
            {"base", f->base()},    {"sim", f->base_similarity()},
            {"lambda", f->lambda()}, {"k", f->k()}};
  }
  if (const auto* f = dynamic_cast<const WeightedSumOracle*>(&oracle)) {
    Json parts = Json::array();
    for (const auto& c : f->components()) {
      parts.push_back({{"weight", c.weight}, {"oracle", OracleToJson(*c.oracle)}});
    }
    return {{"type", "weighted_sum"}, {"components", parts}};
  }
  throw Error(ErrorCode::kConfig,
              "no JSON form for oracle family " + std::string(oracle.family()));
}

std::shared_ptr<const SubmodularOracle> OracleFromJson(const Json& j,
                                                       int n_items,
                                                       LoadContext& context) {
  const std::string type = Field<std::string>(j, "type");
  const Json& params = j.contains("params") ? j.at("params") : j;
  if (type == "coverage") {
    return std::make_shared<CoverageFunction>(
        n_items, Field<std::vector<ItemId>>(params, "target"));
  }
  if (type == "modular") {
    const Json& raw = Require(params, "weights");
    std::vector<double> weights(static_cast<std::size_t>(n_items), 0.0);
    if (raw.is_array()) {
      const auto dense = As<std::vector<double>>(raw, "weights");
      if (static_cast<int>(dense.size()) != n_items) {
        ParseError("dense modular weights must have n_items entries");
      }
      weights = dense;
    } else if (raw.is_object()) {
      for (const auto& [key, value] : raw.items()) {
        int id = -1;
        const auto [ptr, ec] =
            std::from_chars(key.data(), key.data() + key.size(), id);
        if (ec != std::errc() || ptr != key.data() + key.size() || id < 0 ||
            id >= n_items) {
          ParseError("modular weight key '" + key + "' is not an item id");
        }
        weights[static_cast<std::size_t>(id)] = As<double>(value, "weights");
      }
    } else {
      ParseError("modular weights must be an object or an array");
    }
    return std::make_shared<ModularFunction>(std::move(weights));
  }
  if (type == "neighborhood") {
    return std::make_shared<NeighborhoodCoverage>(
        GraphFor(params, n_items, context),
        Field<std::vector<ItemId>>(params, "group"),
        FieldOr<bool>(params, "open_neighborhood", false));
  }
  if (type == "divrel") {
    auto rel = Field<std::vector<double>>(params, "rel");
    const auto base = Field<std::vector<ItemId>>(params, "base");
    if (static_cast<int>(rel.size()) != n_items) {
      ParseError("divrel rel must have n_items entries");
    }
    std::vector<std::vector<double>> sim;
    if (params.contains("sim_file")) {
      sim = ReadMatrix(Resolve(context, Field<std::string>(params, "sim_file")));
    } else {
      sim = Field<std::vector<std::vector<double>>>(params, "sim");
    }
    std::vector<std::vector<double>> rows;
    if (static_cast<int>(sim.size()) == n_items) {
      for (ItemId u : base) {
        if (u < 0 || u >= n_items) ParseError("divrel base item out of range");
        rows.push_back(sim[static_cast<std::size_t>(u)]);
      }
    } else if (sim.size() == base.size()) {
      rows = std::move(sim);
    } else {
      ParseError("divrel sim needs n_items rows or one row per base item");
    }
    bool clamped = false;
    for (double& r : rel) r = ClampNonNegative(r, &clamped);
    for (auto& row : rows) {
      for (double& s : row) s = ClampNonNegative(s, &clamped);
    }
    if (clamped) log::Warning("divrel: negative rel/sim entries clamped to 0");
    return std::make_shared<DiversityRelevance>(
        std::move(rel), base, std::move(rows), Field<double>(params, "lambda"),
        Field<int>(params, "k"));
  }
  if (type == "weighted_sum") {
    std::vector<WeightedSumOracle::Component> parts;
    for (const Json& c : Require(params, "components")) {
      parts.push_back({OracleFromJson(Require(c, "oracle"), n_items, context),
                       FieldOr<double>(c, "weight", 1.0)});
    }
    return std::make_shared<WeightedSumOracle>(std::move(parts));
  }
  ParseError("unknown function type '" + type + "'");
}

// ---------------------------------------------------------------------------

Json MatroidToJson(const ItemMatroid& matroid) {
  if (const auto* m = dynamic_cast<const UniformMatroid*>(&matroid)) {
    return {{"type", "uniform"}, {"cap", m->cap()}};
  }
  if (const auto* m = dynamic_cast<const PartitionMatroid*>(&matroid)) {
    return {{"type", "partition"}, {"groups", m->groups()}, {"caps", m->caps()}};
  }
  if (const auto* m = dynamic_cast<const MatroidIntersection*>(&matroid)) {
    Json parts = Json::array();
    for (const auto& p : m->parts()) parts.push_back(MatroidToJson(*p));
    return {{"type", "intersection"}, {"parts", parts}};
  }
  throw Error(ErrorCode::kConfig, "no JSON form for matroid family " +
                                      std::string(matroid.family()));
}

std::shared_ptr<const ItemMatroid> MatroidFromJson(const Json& j,
                                                   int n_items) {
  const std::string type = Field<std::string>(j, "type");
  if (type == "uniform") {
    return std::make_shared<UniformMatroid>(Field<int>(j, "cap"), n_items);
  }
  if (type == "partition") {
    return std::make_shared<PartitionMatroid>(
        Field<std::vector<std::vector<ItemId>>>(j, "groups"),
        Field<std::vector<int>>(j, "caps"), n_items);
  }
  if (type == "intersection") {
    std::vector<std::shared_ptr<const ItemMatroid>> parts;
    for (const Json& p : Require(j, "parts")) {
      parts.push_back(MatroidFromJson(p, n_items));
    }
    return std::make_shared<MatroidIntersection>(std::move(parts));
  }
  ParseError("unknown matroid type '" + type + "'");
}

// ---------------------------------------------------------------------------

Json DemandToJson(const Demand& demand) {
  Json fn = OracleToJson(*demand.oracle);
  const std::string type = fn.at("type");
  fn.erase("type");
  Json j = {{"type", type},
            {"params", fn},
            {"budget", demand.budget},
            {"arrival", demand.arrival},
            {"weight", demand.weight}};
  j["slots"] = demand.slots.has_value() ? Json(*demand.slots) : Json(nullptr);
  return j;
}

Demand DemandFromJson(const Json& j, int n_items, LoadContext& context) {
  Demand d;
  d.oracle = OracleFromJson(j, n_items, context);
  d.budget = Field<int>(j, "budget");
  d.arrival = FieldOr<int>(j, "arrival", 0);
  d.weight = FieldOr<double>(j, "weight", 1.0);
  if (j.contains("slots") && !j.at("slots").is_null()) {
    d.slots = Field<std::vector<Rank>>(j, "slots");
  }
  return d;
}

Json InstanceToJson(const Instance& instance) {
  Json demands = Json::array();
  for (const Demand& d : instance.demands) demands.push_back(DemandToJson(d));
  Json j = {{"n_items", instance.n_items},
            {"allow_reuse", instance.allow_reuse},
            {"mode", std::string(ModeName(instance.mode))},
            {"demands", demands}};
  if (instance.base_matroid) j["matroid"] = MatroidToJson(*instance.base_matroid);
  if (!instance.generator.is_null()) j["generator"] = instance.generator;
  return j;
}

Instance InstanceFromJson(const Json& j, LoadContext& context) {
  Instance instance;
  instance.n_items = Field<int>(j, "n_items");
  instance.allow_reuse = FieldOr<bool>(j, "allow_reuse", false);
  instance.mode = ParseMode(FieldOr<std::string>(j, "mode", "MSR"));
  for (const Json& d : Require(j, "demands")) {
    instance.demands.push_back(DemandFromJson(d, instance.n_items, context));
  }
  if (j.contains("matroid") && !j.at("matroid").is_null()) {
    instance.base_matroid = MatroidFromJson(j.at("matroid"), instance.n_items);
  }
  if (j.contains("generator")) instance.generator = j.at("generator");
  instance.Validate();
  return instance;
}

Instance InstanceFromJson(const Json& j) {
  LoadContext context;
  return InstanceFromJson(j, context);
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) ParseError("cannot open instance file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    ParseError("instance file " + path.string() + ": " + e.what());
  }
  LoadContext context;
  context.base_dir = path.parent_path();
  return InstanceFromJson(j, context);
}

void SaveInstance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kConfig, "cannot write " + path.string());
  }
  out << InstanceToJson(instance).dump(1) << "\n";
}

Json SequenceToJson(const SlotAssignment& seq, ItemId dummy) {
  Json out = Json::array();
  for (ItemId v : seq.ToDense(dummy)) {
    out.push_back(v == dummy ? Json(nullptr) : Json(v));
  }
  return out;
}

SlotAssignment SequenceFromJson(const Json& j) {
  if (!j.is_array()) ParseError("sequence must be an array");
  SlotAssignment seq;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_null()) continue;
    seq.Assign(static_cast<Rank>(i + 1), As<ItemId>(j[i], "sequence"));
  }
  return seq;
}

// ---------------------------------------------------------------------------

EdgeList ReadEdgeList(const std::filesystem::path& path, int min_nodes) {
  std::ifstream in(path);
  if (!in) ParseError("cannot open edge list " + path.string());
  std::vector<std::pair<std::string, std::string>> raw;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string u, v;
    if (!(fields >> u >> v)) {
      ParseError(path.string() + ":" + std::to_string(line_no) +
                 ": expected two node labels");
    }
    raw.emplace_back(u, v);
  }
  auto as_id = [](const std::string& s, long long* out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
    return ec == std::errc() && ptr == s.data() + s.size() && *out >= 0;
  };
  bool numeric = true;
  long long max_id = -1;
  for (const auto& [u, v] : raw) {
    long long a, b;
    if (!as_id(u, &a) || !as_id(v, &b)) {
      numeric = false;
      break;
    }
    max_id = std::max({max_id, a, b});
  }
  EdgeList list;
  if (numeric) {
    list.num_nodes = std::max<int>(static_cast<int>(max_id + 1), min_nodes);
    for (const auto& [u, v] : raw) {
      list.edges.emplace_back(std::stoi(u), std::stoi(v));
    }
    return list;
  }
  std::unordered_map<std::string, ItemId> ids;
  auto id_of = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<ItemId>(ids.size()));
    if (inserted) list.labels.push_back(label);
    return it->second;
  };
  for (const auto& [u, v] : raw) {
    const ItemId a = id_of(u);
    const ItemId b = id_of(v);
    list.edges.emplace_back(a, b);
  }
  list.num_nodes = std::max<int>(static_cast<int>(ids.size()), min_nodes);
  return list;
}

std::vector<std::vector<double>> ReadMatrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) ParseError("cannot open matrix file " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<double> row;
    double x;
    while (fields >> x) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace msr
