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

#ifndef MSR_FUNCTIONS_H_
#define MSR_FUNCTIONS_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "msr/submodular_oracle.h"
#include "msr/types.h"

namespace msr {

// f(S) = |S ∩ T| / |T| for a nonempty target set T.
class CoverageFunction final : public SubmodularOracle {
 public:
  CoverageFunction(int universe_size, std::vector<ItemId> target);

  const std::vector<ItemId>& target() const { return target_; }

  double SetValue(std::span<const ItemId> set) const override;
  double SetMarginal(ItemId v, std::span<const ItemId> set) const override;
  std::unique_ptr<IncrementalEvaluator> NewEvaluator() const override;
  std::string_view family() const override { return "coverage"; }

  // Position of v in target(), or -1.
  int TargetIndex(ItemId v) const;

 private:
  std::vector<ItemId> target_;
};

// Undirected simple graph over the items; shared between demands.
struct Graph {
  int num_nodes = 0;
  // Sorted, deduplicated neighbor lists without self loops.
  std::vector<std::vector<ItemId>> adjacency;
  // File the graph was read from, if any; used when serializing.
  std::optional<std::string> source_path;

  static Graph FromEdges(int num_nodes,
                         std::span<const std::pair<ItemId, ItemId>> edges);
  std::vector<std::pair<ItemId, ItemId>> Edges() const;
};

// f(S) = |N[S] ∩ G| / |G|, with N[S] the closed neighborhood S ∪ adj(S), or
// the open neighborhood adj(S) when `open_neighborhood` is set.
class NeighborhoodCoverage final : public SubmodularOracle {
 public:
  NeighborhoodCoverage(std::shared_ptr<const Graph> graph,
                       std::vector<ItemId> group, bool open_neighborhood);

  const Graph& graph() const { return *graph_; }
  std::shared_ptr<const Graph> shared_graph() const { return graph_; }
  const std::vector<ItemId>& group() const { return group_; }
  bool open_neighborhood() const { return open_; }
  int GroupIndex(ItemId v) const;

  double SetValue(std::span<const ItemId> set) const override;
  std::unique_ptr<IncrementalEvaluator> NewEvaluator() const override;
  std::string_view family() const override { return "neighborhood"; }

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<ItemId> group_;
  bool open_;
};

// f(S) = Σ_{v∈S} w(v) with non-negative weights.
class ModularFunction final : public SubmodularOracle {
 public:
  explicit ModularFunction(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }

  double SetValue(std::span<const ItemId> set) const override;
  double SetMarginal(ItemId v, std::span<const ItemId> set) const override;
  std::unique_ptr<IncrementalEvaluator> NewEvaluator() const override;
  std::string_view family() const override { return "modular"; }

 private:
  std::vector<double> weights_;
};

// Relevance/diversity trade-off:
//   f(S) = (1-λ) Σ_{v∈S} rel(v) + (λ k / |B|) Σ_{u∈B} max_{v∈S} sim(u, v)
// with the max over an empty S equal to 0. rel and sim must be non-negative
// for f to be monotone. sim is stored as one row per base element u ∈ B.
class DiversityRelevance final : public SubmodularOracle {
 public:
  DiversityRelevance(std::vector<double> relevance, std::vector<ItemId> base,
                     std::vector<std::vector<double>> base_similarity,
                     double lambda, int k);

  const std::vector<double>& relevance() const { return relevance_; }
  const std::vector<ItemId>& base() const { return base_; }
  const std::vector<std::vector<double>>& base_similarity() const {
    return similarity_;
  }
  double lambda() const { return lambda_; }
  int k() const { return k_; }
  // λ k / |B|.
  double diversity_scale() const { return scale_; }

  double SetValue(std::span<const ItemId> set) const override;
  std::unique_ptr<IncrementalEvaluator> NewEvaluator() const override;
  std::string_view family() const override { return "divrel"; }

 private:
  std::vector<double> relevance_;
  std::vector<ItemId> base_;
  std::vector<std::vector<double>> similarity_;
  double lambda_;
  int k_;
  double scale_;
};

// f(S) = Σ_j w_j f_j(S) with w_j >= 0.
class WeightedSumOracle final : public SubmodularOracle {
 public:
  struct Component {
    std::shared_ptr<const SubmodularOracle> oracle;
    double weight = 1.0;
  };

  explicit WeightedSumOracle(std::vector<Component> components);

  const std::vector<Component>& components() const { return components_; }

  double SetValue(std::span<const ItemId> set) const override;
  std::unique_ptr<IncrementalEvaluator> NewEvaluator() const override;
  std::string_view family() const override { return "weighted_sum"; }

 private:
  std::vector<Component> components_;
};

}  // namespace msr

#endif  // MSR_FUNCTIONS_H_
