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

#ifndef MSR_PROPERTY_CHECKS_H_
#define MSR_PROPERTY_CHECKS_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "msr/lifted_objective.h"
#include "msr/matroid.h"
#include "msr/random.h"
#include "msr/submodular_oracle.h"
#include "msr/types.h"

namespace msr {

std::string ElementString(ItemId v);
std::string ElementString(const ExtendedElement& e);

template <typename E>
std::string SetString(std::span<const E> set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ", ";
    out += ElementString(set[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Submodularity

struct SubmodularViolation {
  enum class Kind { kNormalization, kMonotonicity, kSubmodularity, kMarginal };

  Kind kind = Kind::kSubmodularity;
  // Ground indices: X ⊆ Y and v ∉ Y. For kMonotonicity Y = X + v.
  std::vector<int> x;
  std::vector<int> y;
  int v = -1;
  double magnitude = 0.0;

  std::string Describe() const;
};

struct SubmodularReport {
  std::vector<SubmodularViolation> violations;
  std::int64_t checks = 0;
  bool exhaustive = false;

  bool ok() const { return violations.empty(); }
};

struct SubmodularCheckOptions {
  // Sampled triples when the ground set is above exhaustive_limit.
  int trials = 1000;
  std::uint64_t seed = 0;
  int exhaustive_limit = 12;
  // Forces sampling even for small ground sets.
  bool force_sampling = false;
  std::size_t max_violations = 16;
};

// A set function over ground indices 0..m-1 (argument sorted ascending).
using IndexSetFunction = std::function<double(std::span<const int>)>;
// Optional claimed marginal; checked against the value difference.
using IndexMarginal = std::function<double(int, std::span<const int>)>;

// Exhaustive mode tabulates all 2^m values and tests normalization,
// monotonicity, and the local exchange inequality
//   f(S+u) + f(S+v) >= f(S+u+v) + f(S),
// which is equivalent to submodularity. Sampled mode draws X ⊆ Y, v ∉ Y.
// Tolerance is kTolerance (absolute).
SubmodularReport CheckSetFunction(const IndexSetFunction& value, int m,
                                  const IndexMarginal& marginal,
                                  const SubmodularCheckOptions& options = {});

// Also cross-checks the oracle's incremental evaluator against Marginal.
SubmodularReport CheckSubmodular(const SubmodularOracle& oracle,
                                 int universe_size,
                                 const SubmodularCheckOptions& options = {});

// g over the given lifted elements (typically items x relevant ranks).
SubmodularReport CheckLiftedSubmodular(
    const LiftedObjective& g, std::span<const ExtendedElement> ground,
    const SubmodularCheckOptions& options = {});

// Every (item, rank) pair over the items and g's relevant ranks.
std::vector<ExtendedElement> LiftedGround(const LiftedObjective& g,
                                          int n_items);

// ---------------------------------------------------------------------------
// Matroid axioms

struct MatroidViolation {
  enum class Kind { kEmptyDependent, kDownwardClosure, kAugmentation };
  Kind kind = Kind::kAugmentation;
  std::string witness;
};

struct MatroidReport {
  std::vector<MatroidViolation> violations;
  std::int64_t checks = 0;
  bool exhaustive = false;

  bool ok() const { return violations.empty(); }
};

struct MatroidCheckOptions {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  // Largest ground set tabulated in exhaustive mode.
  int table_limit = 16;
  // Augmentation pairs (|I| < |J|) enumerated in full up to this count,
  // sampled beyond it.
  std::int64_t pair_budget = 10'000'000;
  std::int64_t samples = 100'000;
  std::size_t max_violations = 16;
};

namespace internal {

template <typename E>
std::vector<E> Subset(std::span<const E> ground, std::uint32_t mask) {
  std::vector<E> out;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (mask >> i & 1u) out.push_back(ground[i]);
  }
  return out;
}

template <typename E>
void AddMatroidViolation(MatroidReport* report, MatroidViolation::Kind kind,
                         std::string witness, std::size_t cap) {
  if (report->violations.size() < cap) {
    report->violations.push_back({kind, std::move(witness)});
  }
}

template <typename E>
std::vector<E> RandomIndependent(const Matroid<E>& m,
                                 std::span<const E> ground, Rng& rng) {
  std::vector<std::size_t> order(ground.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1],
              order[static_cast<std::size_t>(UniformInt(rng, 0, i - 1))]);
  }
  const double stop = UniformReal(rng);
  std::vector<E> set;
  for (std::size_t i : order) {
    if (UniformReal(rng) < stop * 0.2) break;
    if (m.CanAdd(set, ground[i])) set.push_back(ground[i]);
  }
  return set;
}

}  // namespace internal

// Checks that the empty set is independent, downward closure, and
// augmentation over `ground`.
template <typename E>
MatroidReport CheckMatroid(const Matroid<E>& m, std::span<const E> ground,
                           const MatroidCheckOptions& options = {}) {
  using Kind = MatroidViolation::Kind;
  MatroidReport report;
  const std::size_t cap = options.max_violations;
  const std::vector<E> none;
  if (!m.IsIndependent(none)) {
    internal::AddMatroidViolation<E>(&report, Kind::kEmptyDependent, "{}", cap);
  }
  Rng rng = MakeRng(options.seed, "check_matroid");
  const int n = static_cast<int>(ground.size());

  if (options.exhaustive && n <= options.table_limit) {
    report.exhaustive = true;
    const std::uint32_t masks = 1u << n;
    std::vector<char> indep(masks);
    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      indep[mask] = m.IsIndependent(internal::Subset(ground, mask));
      if (indep[mask]) by_size[std::popcount(mask)].push_back(mask);
    }
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      if (!indep[mask]) continue;
      for (int i = 0; i < n; ++i) {
        if (!(mask >> i & 1u)) continue;
        ++report.checks;
        if (!indep[mask ^ (1u << i)]) {
          const auto s = internal::Subset(ground, mask);
          internal::AddMatroidViolation<E>(
              &report, Kind::kDownwardClosure,
              SetString<E>(s) + " independent but dropping " +
                  ElementString(ground[i]) + " is not",
              cap);
        }
      }
    }
    auto augment = [&](std::uint32_t i_mask, std::uint32_t j_mask) {
      ++report.checks;
      std::uint32_t extra = j_mask & ~i_mask;
      while (extra) {
        const std::uint32_t bit = extra & (~extra + 1u);
        if (indep[i_mask | bit]) return;
        extra ^= bit;
      }
      const auto i_set = internal::Subset(ground, i_mask);
      const auto j_set = internal::Subset(ground, j_mask);
      internal::AddMatroidViolation<E>(
          &report, Kind::kAugmentation,
          "I=" + SetString<E>(i_set) + " J=" + SetString<E>(j_set) +
              ": no element of J\\I extends I",
          cap);
    };
    // Pairs of independent sets with |I| < |J|, grouped by size.
    std::vector<std::pair<int, int>> size_pairs;
    std::vector<double> weight;
    std::int64_t pairs = 0;
    for (int k = 0; k <= n; ++k) {
      for (int l = k + 1; l <= n; ++l) {
        const auto w = static_cast<std::int64_t>(by_size[k].size()) *
                       static_cast<std::int64_t>(by_size[l].size());
        if (w == 0) continue;
        pairs += w;
        size_pairs.emplace_back(k, l);
        weight.push_back(static_cast<double>(w));
      }
    }
    if (pairs <= options.pair_budget) {
      for (const auto& [k, l] : size_pairs) {
        for (std::uint32_t i_mask : by_size[k]) {
          for (std::uint32_t j_mask : by_size[l]) augment(i_mask, j_mask);
        }
      }
    } else {
      double total = 0.0;
      for (double w : weight) total += w;
      for (std::int64_t s = 0; s < options.samples; ++s) {
        double r = UniformReal(rng) * total;
        std::size_t p = 0;
        while (p + 1 < weight.size() && r >= weight[p]) r -= weight[p++];
        const auto& lo = by_size[size_pairs[p].first];
        const auto& hi = by_size[size_pairs[p].second];
        augment(lo[static_cast<std::size_t>(UniformInt(rng, 0, lo.size() - 1))],
                hi[static_cast<std::size_t>(UniformInt(rng, 0, hi.size() - 1))]);
      }
    }
    return report;
  }

  for (std::int64_t s = 0; s < options.samples; ++s) {
    const std::vector<E> a = internal::RandomIndependent(m, ground, rng);
    const std::vector<E> b = internal::RandomIndependent(m, ground, rng);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::vector<E> smaller = a;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      ++report.checks;
      if (!m.IsIndependent(smaller)) {
        internal::AddMatroidViolation<E>(
            &report, Kind::kDownwardClosure,
            SetString<E>(a) + " independent but dropping " +
                ElementString(a[i]) + " is not",
            cap);
      }
    }
    const auto& i_set = a.size() < b.size() ? a : b;
    const auto& j_set = a.size() < b.size() ? b : a;
    if (i_set.size() == j_set.size()) continue;
    ++report.checks;
    bool extended = false;
    for (const E& e : j_set) {
      if (std::find(i_set.begin(), i_set.end(), e) != i_set.end()) continue;
      if (m.CanAdd(i_set, e)) {
        extended = true;
        break;
      }
    }
    if (!extended) {
      internal::AddMatroidViolation<E>(
          &report, Kind::kAugmentation,
          "I=" + SetString<E>(i_set) + " J=" + SetString<E>(j_set) +
              ": no element of J\\I extends I",
          cap);
    }
  }
  return report;
}

}  // namespace msr

#endif  // MSR_PROPERTY_CHECKS_H_
