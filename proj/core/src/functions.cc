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

#include "msr/functions.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "msr/error.h"

namespace msr {
namespace {

std::vector<ItemId> SortedUniqueIds(std::vector<ItemId> ids, int universe_size,
                                    const char* what) {
  for (ItemId v : ids) {
    if (v < 0 || v >= universe_size) {
      throw Error(ErrorCode::kMalformedInput,
                  std::string(what) + " item " + std::to_string(v) +
                      " outside universe of size " +
                      std::to_string(universe_size));
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

int IndexIn(const std::vector<ItemId>& sorted, ItemId v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) return -1;
  return static_cast<int>(it - sorted.begin());
}

// ---------------------------------------------------------------------------

class CoverageEvaluator : public IncrementalEvaluator {
 public:
  explicit CoverageEvaluator(const CoverageFunction& f)
      : f_(f), covered_(f.target().size(), 0) {}

  double Gain(ItemId v) const override {
    const int idx = f_.TargetIndex(v);
    if (idx < 0 || covered_[idx]) return 0.0;
    return 1.0 / static_cast<double>(covered_.size());
  }

  void Add(ItemId v) override {
    f_.CheckItem(v);
    const int idx = f_.TargetIndex(v);
    if (idx < 0 || covered_[idx]) return;
    covered_[idx] = 1;
    ++count_;
  }

  void Clear() override {
    std::fill(covered_.begin(), covered_.end(), 0);
    count_ = 0;
  }

  double value() const override {
    return static_cast<double>(count_) / static_cast<double>(covered_.size());
  }

  void AccumulateGains(std::span<double> gains, double weight) const override {
    const double unit = 1.0 / static_cast<double>(covered_.size());
    const auto& target = f_.target();
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (!covered_[i]) gains[target[i]] += weight * unit;
    }
  }

 private:
  const CoverageFunction& f_;
  std::vector<char> covered_;
  int count_ = 0;
};

class NeighborhoodEvaluator : public IncrementalEvaluator {
 public:
  explicit NeighborhoodEvaluator(const NeighborhoodCoverage& f)
      : f_(f), covered_(f.group().size(), 0) {}

  double Gain(ItemId v) const override {
    if (v == f_.dummy()) return 0.0;
    int fresh = 0;
    ForEachNeighbor(v, [&](int idx) {
      if (!covered_[idx]) ++fresh;
    });
    return static_cast<double>(fresh) / static_cast<double>(covered_.size());
  }

  void Add(ItemId v) override {
    f_.CheckItem(v);
    if (v == f_.dummy()) return;
    ForEachNeighbor(v, [&](int idx) {
      if (!covered_[idx]) {
        covered_[idx] = 1;
        ++count_;
      }
    });
  }

  void Clear() override {
    std::fill(covered_.begin(), covered_.end(), 0);
    count_ = 0;
  }

  double value() const override {
    return static_cast<double>(count_) / static_cast<double>(covered_.size());
  }

  // Each uncovered group node credits every node whose neighborhood holds it;
  // summing unit credits per node reproduces Gain() up to rounding.
  void AccumulateGains(std::span<double> gains, double weight) const override {
    const auto& group = f_.group();
    const auto& adj = f_.graph().adjacency;
    std::vector<int> fresh(gains.size(), 0);
    std::vector<ItemId> touched;
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (covered_[i]) continue;
      const ItemId g = group[i];
      if (!f_.open_neighborhood()) {
        if (fresh[g]++ == 0) touched.push_back(g);
      }
      for (ItemId u : adj[g]) {
        if (fresh[u]++ == 0) touched.push_back(u);
      }
    }
    std::sort(touched.begin(), touched.end());
    const double denom = static_cast<double>(covered_.size());
    for (ItemId u : touched) {
      gains[u] += weight * (static_cast<double>(fresh[u]) / denom);
    }
  }

 private:
  template <typename Fn>
  void ForEachNeighbor(ItemId v, Fn&& fn) const {
    if (!f_.open_neighborhood()) {
      const int idx = f_.GroupIndex(v);
      if (idx >= 0) fn(idx);
    }
    for (ItemId u : f_.graph().adjacency[v]) {
      const int idx = f_.GroupIndex(u);
      if (idx >= 0) fn(idx);
    }
  }

  const NeighborhoodCoverage& f_;
  std::vector<char> covered_;
  int count_ = 0;
};

class ModularEvaluator : public IncrementalEvaluator {
 public:
  explicit ModularEvaluator(const ModularFunction& f)
      : f_(f), member_(f.weights().size(), 0) {}

  double Gain(ItemId v) const override {
    if (v == f_.dummy() || member_[v]) return 0.0;
    return f_.weights()[v];
  }

  void Add(ItemId v) override {
    f_.CheckItem(v);
    if (v == f_.dummy() || member_[v]) return;
    member_[v] = 1;
    members_.insert(std::lower_bound(members_.begin(), members_.end(), v), v);
  }

  void Clear() override {
    std::fill(member_.begin(), member_.end(), 0);
    members_.clear();
  }

  double value() const override { return f_.SetValue(members_); }

 private:
  const ModularFunction& f_;
  std::vector<char> member_;
  std::vector<ItemId> members_;
};

class DiversityRelevanceEvaluator : public IncrementalEvaluator {
 public:
  explicit DiversityRelevanceEvaluator(const DiversityRelevance& f)
      : f_(f),
        member_(f.relevance().size(), 0),
        best_(f.base().size(), 0.0) {}

  double Gain(ItemId v) const override {
    if (v == f_.dummy() || member_[v]) return 0.0;
    double coverage_gain = 0.0;
    const auto& sim = f_.base_similarity();
    for (std::size_t u = 0; u < best_.size(); ++u) {
      coverage_gain += std::max(0.0, sim[u][v] - best_[u]);
    }
    return (1.0 - f_.lambda()) * f_.relevance()[v] +
           f_.diversity_scale() * coverage_gain;
  }

  void Add(ItemId v) override {
    f_.CheckItem(v);
    if (v == f_.dummy() || member_[v]) return;
    member_[v] = 1;
    members_.insert(std::lower_bound(members_.begin(), members_.end(), v), v);
    const auto& sim = f_.base_similarity();
    for (std::size_t u = 0; u < best_.size(); ++u) {
      best_[u] = std::max(best_[u], sim[u][v]);
    }
  }

  void Clear() override {
    std::fill(member_.begin(), member_.end(), 0);
    std::fill(best_.begin(), best_.end(), 0.0);
    members_.clear();
  }

  double value() const override { return f_.SetValue(members_); }

 private:
  const DiversityRelevance& f_;
  std::vector<char> member_;
  std::vector<ItemId> members_;
  std::vector<double> best_;
};

class WeightedSumEvaluator : public IncrementalEvaluator {
 public:
  explicit WeightedSumEvaluator(const WeightedSumOracle& f) : f_(f) {
    for (const auto& c : f.components()) parts_.push_back(c.oracle->NewEvaluator());
  }

  double Gain(ItemId v) const override {
    double total = 0.0;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      total += f_.components()[j].weight * parts_[j]->Gain(v);
    }
    return total;
  }

  void Add(ItemId v) override {
    for (auto& p : parts_) p->Add(v);
  }

  void Clear() override {
    for (auto& p : parts_) p->Clear();
  }

  double value() const override {
    double total = 0.0;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      total += f_.components()[j].weight * parts_[j]->value();
    }
    return total;
  }

  void AccumulateGains(std::span<double> gains, double weight) const override {
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      parts_[j]->AccumulateGains(gains, weight * f_.components()[j].weight);
    }
  }

 private:
  const WeightedSumOracle& f_;
  std::vector<std::unique_ptr<IncrementalEvaluator>> parts_;
};

}  // namespace

// ---------------------------------------------------------------------------

CoverageFunction::CoverageFunction(int universe_size,
                                   std::vector<ItemId> target)
    : SubmodularOracle(universe_size),
      target_(SortedUniqueIds(std::move(target), universe_size, "coverage")) {
  if (target_.empty()) {
    throw Error(ErrorCode::kMalformedInput, "coverage target is empty");
  }
}

int CoverageFunction::TargetIndex(ItemId v) const { return IndexIn(target_, v); }

double CoverageFunction::SetValue(std::span<const ItemId> set) const {
  int hits = 0;
  for (ItemId v : set) {
    if (TargetIndex(v) >= 0) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(target_.size());
}

double CoverageFunction::SetMarginal(ItemId v,
                                     std::span<const ItemId> set) const {
  if (TargetIndex(v) < 0) return 0.0;
  if (std::binary_search(set.begin(), set.end(), v)) return 0.0;
  return 1.0 / static_cast<double>(target_.size());
}

std::unique_ptr<IncrementalEvaluator> CoverageFunction::NewEvaluator() const {
  return std::make_unique<CoverageEvaluator>(*this);
}

// ---------------------------------------------------------------------------

Graph Graph::FromEdges(int num_nodes,
                       std::span<const std::pair<ItemId, ItemId>> edges) {
  Graph g;
  g.num_nodes = num_nodes;
  g.adjacency.assign(static_cast<std::size_t>(num_nodes), {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes) {
      throw Error(ErrorCode::kMalformedInput,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") outside graph of " + std::to_string(num_nodes) +
                      " nodes");
    }
    if (u == v) continue;
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return g;
}

std::vector<std::pair<ItemId, ItemId>> Graph::Edges() const {
  std::vector<std::pair<ItemId, ItemId>> edges;
  for (ItemId u = 0; u < num_nodes; ++u) {
    for (ItemId v : adjacency[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

NeighborhoodCoverage::NeighborhoodCoverage(std::shared_ptr<const Graph> graph,
                                           std::vector<ItemId> group,
                                           bool open_neighborhood)
    : SubmodularOracle(graph ? graph->num_nodes : 0),
      graph_(std::move(graph)),
      open_(open_neighborhood) {
  if (!graph_) throw Error(ErrorCode::kMalformedInput, "null graph");
  group_ = SortedUniqueIds(std::move(group), graph_->num_nodes, "group");
  if (group_.empty()) {
    throw Error(ErrorCode::kMalformedInput, "neighborhood group is empty");
  }
}

int NeighborhoodCoverage::GroupIndex(ItemId v) const {
  return IndexIn(group_, v);
}

double NeighborhoodCoverage::SetValue(std::span<const ItemId> set) const {
  std::vector<char> covered(group_.size(), 0);
  int count = 0;
  auto mark = [&](ItemId u) {
    const int idx = GroupIndex(u);
    if (idx >= 0 && !covered[idx]) {
      covered[idx] = 1;
      ++count;
    }
  };
  for (ItemId v : set) {
    if (!open_) mark(v);
    for (ItemId u : graph_->adjacency[v]) mark(u);
  }
  return static_cast<double>(count) / static_cast<double>(group_.size());
}

std::unique_ptr<IncrementalEvaluator> NeighborhoodCoverage::NewEvaluator()
    const {
  return std::make_unique<NeighborhoodEvaluator>(*this);
}

// ---------------------------------------------------------------------------

ModularFunction::ModularFunction(std::vector<double> weights)
    : SubmodularOracle(static_cast<int>(weights.size())),
      weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kMalformedInput,
                  "modular weights must be finite and non-negative");
    }
  }
}

double ModularFunction::SetValue(std::span<const ItemId> set) const {
  double total = 0.0;
  for (ItemId v : set) total += weights_[v];
  return total;
}

double ModularFunction::SetMarginal(ItemId v,
                                    std::span<const ItemId> set) const {
  if (std::binary_search(set.begin(), set.end(), v)) return 0.0;
  return weights_[v];
}

std::unique_ptr<IncrementalEvaluator> ModularFunction::NewEvaluator() const {
  return std::make_unique<ModularEvaluator>(*this);
}

// ---------------------------------------------------------------------------

DiversityRelevance::DiversityRelevance(
    std::vector<double> relevance, std::vector<ItemId> base,
    std::vector<std::vector<double>> base_similarity, double lambda, int k)
    : SubmodularOracle(static_cast<int>(relevance.size())),
      relevance_(std::move(relevance)),
      base_(std::move(base)),
      similarity_(std::move(base_similarity)),
      lambda_(lambda),
      k_(k) {
  const int n = universe_size();
  if (!(lambda_ >= 0.0 && lambda_ <= 1.0)) {
    throw Error(ErrorCode::kMalformedInput, "divrel lambda outside [0, 1]");
  }
  if (k_ < 0) throw Error(ErrorCode::kMalformedInput, "divrel k < 0");
  if (base_.empty()) {
    throw Error(ErrorCode::kMalformedInput, "divrel base set is empty");
  }
  for (ItemId u : base_) {
    if (u < 0 || u >= n) {
      throw Error(ErrorCode::kMalformedInput,
                  "divrel base item " + std::to_string(u) + " out of range");
    }
  }
  if (similarity_.size() != base_.size()) {
    throw Error(ErrorCode::kMalformedInput,
                "divrel similarity needs one row per base item");
  }
  for (const auto& row : similarity_) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::kMalformedInput,
                  "divrel similarity row length differs from universe size");
    }
    for (double s : row) {
      if (!(s >= 0.0) || !std::isfinite(s)) {
        throw Error(ErrorCode::kMalformedInput,
                    "divrel similarity must be finite and non-negative");
      }
    }
  }
  for (double r : relevance_) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw Error(ErrorCode::kMalformedInput,
                  "divrel relevance must be finite and non-negative");
    }
  }
  scale_ = lambda_ * static_cast<double>(k_) /
           static_cast<double>(base_.size());
}

double DiversityRelevance::SetValue(std::span<const ItemId> set) const {
  double relevance = 0.0;
  for (ItemId v : set) relevance += relevance_[v];
  double coverage = 0.0;
  for (const auto& row : similarity_) {
    double best = 0.0;
    for (ItemId v : set) best = std::max(best, row[v]);
    coverage += best;
  }
  return (1.0 - lambda_) * relevance + scale_ * coverage;
}

std::unique_ptr<IncrementalEvaluator> DiversityRelevance::NewEvaluator()
    const {
  return std::make_unique<DiversityRelevanceEvaluator>(*this);
}

// ---------------------------------------------------------------------------

WeightedSumOracle::WeightedSumOracle(std::vector<Component> components)
    : SubmodularOracle(components.empty()
                           ? 0
                           : components.front().oracle->universe_size()),
      components_(std::move(components)) {
  if (components_.empty()) {
    throw Error(ErrorCode::kMalformedInput, "weighted sum has no components");
  }
  for (const auto& c : components_) {
    if (!c.oracle || c.oracle->universe_size() != universe_size()) {
      throw Error(ErrorCode::kMalformedInput,
                  "weighted sum components disagree on universe size");
    }
    if (!(c.weight >= 0.0)) {
      throw Error(ErrorCode::kMalformedInput,
                  "weighted sum weights must be non-negative");
    }
  }
}

double WeightedSumOracle::SetValue(std::span<const ItemId> set) const {
  double total = 0.0;
  for (const auto& c : components_) total += c.weight * c.oracle->SetValue(set);
  return total;
}

std::unique_ptr<IncrementalEvaluator> WeightedSumOracle::NewEvaluator() const {
  return std::make_unique<WeightedSumEvaluator>(*this);
}

}  // namespace msr
