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

#include "msr/property_checks.h"

#include <cmath>
#include <sstream>

namespace msr {
namespace {

using Kind = SubmodularViolation::Kind;

std::vector<int> MaskToIndices(std::uint32_t mask, int m) {
  std::vector<int> out;
  for (int i = 0; i < m; ++i) {
    if (mask >> i & 1u) out.push_back(i);
  }
  return out;
}

std::vector<int> WithElement(std::vector<int> set, int v) {
  set.insert(std::lower_bound(set.begin(), set.end(), v), v);
  return set;
}

class Recorder {
 public:
  Recorder(SubmodularReport* report, std::size_t cap)
      : report_(report), cap_(cap) {}

  // Records when `slack` (required to be >= 0) is below -kTolerance.
  void Expect(double slack, Kind kind, const std::vector<int>& x,
              const std::vector<int>& y, int v) {
    ++report_->checks;
    if (slack >= -kTolerance) return;
    if (report_->violations.size() >= cap_) return;
    report_->violations.push_back({kind, x, y, v, -slack});
  }

 private:
  SubmodularReport* report_;
  std::size_t cap_;
};

void Exhaustive(const IndexSetFunction& value, int m,
                const IndexMarginal& marginal, Recorder& rec) {
  const std::uint32_t masks = 1u << m;
  std::vector<double> table(masks);
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    table[mask] = value(MaskToIndices(mask, m));
  }
  rec.Expect(-std::abs(table[0]), Kind::kNormalization, {}, {}, -1);
  for (std::uint32_t s = 0; s < masks; ++s) {
    for (int u = 0; u < m; ++u) {
      const std::uint32_t bu = 1u << u;
      if (s & bu) continue;
      const double gain_u = table[s | bu] - table[s];
      if (gain_u < -kTolerance || marginal) {
        const auto x = MaskToIndices(s, m);
        rec.Expect(gain_u, Kind::kMonotonicity, x, WithElement(x, u), u);
        if (marginal) {
          rec.Expect(-std::abs(marginal(u, x) - gain_u), Kind::kMarginal, x, x,
                     u);
        }
      } else {
        rec.Expect(gain_u, Kind::kMonotonicity, {}, {}, u);
      }
      for (int v = u + 1; v < m; ++v) {
        const std::uint32_t bv = 1u << v;
        if (s & bv) continue;
        const double slack =
            table[s | bu] + table[s | bv] - table[s | bu | bv] - table[s];
        if (slack < -kTolerance) {
          const auto x = MaskToIndices(s, m);
          rec.Expect(slack, Kind::kSubmodularity, x, WithElement(x, u), v);
        } else {
          rec.Expect(slack, Kind::kSubmodularity, {}, {}, v);
        }
      }
    }
  }
}

void Sampled(const IndexSetFunction& value, int m,
             const IndexMarginal& marginal, const SubmodularCheckOptions& opts,
             Recorder& rec) {
  rec.Expect(-std::abs(value(std::vector<int>{})), Kind::kNormalization, {}, {},
             -1);
  if (m == 0) return;
  Rng rng = MakeRng(opts.seed, "check_submodular");
  for (int trial = 0; trial < opts.trials; ++trial) {
    std::vector<int> x, y, outside;
    for (int i = 0; i < m; ++i) {
      if (UniformReal(rng) < 0.5) {
        y.push_back(i);
        if (UniformReal(rng) < 0.5) x.push_back(i);
      } else {
        outside.push_back(i);
      }
    }
    if (outside.empty()) {
      // Y = ground leaves no v; drop one element from Y.
      const int drop = y[static_cast<std::size_t>(UniformInt(rng, 0, y.size() - 1))];
      y.erase(std::find(y.begin(), y.end(), drop));
      x.erase(std::remove(x.begin(), x.end(), drop), x.end());
      outside.push_back(drop);
    }
    const int v =
        outside[static_cast<std::size_t>(UniformInt(rng, 0, outside.size() - 1))];
    const double fx = value(x);
    const double fy = value(y);
    const double gain_x = value(WithElement(x, v)) - fx;
    const double gain_y = value(WithElement(y, v)) - fy;
    rec.Expect(fy - fx, Kind::kMonotonicity, x, y, -1);
    rec.Expect(gain_y, Kind::kMonotonicity, y, WithElement(y, v), v);
    rec.Expect(gain_x - gain_y, Kind::kSubmodularity, x, y, v);
    if (marginal) {
      rec.Expect(-std::abs(marginal(v, x) - gain_x), Kind::kMarginal, x, x, v);
      rec.Expect(-std::abs(marginal(v, y) - gain_y), Kind::kMarginal, y, y, v);
    }
  }
}

void CheckEvaluator(const SubmodularOracle& oracle, int universe_size,
                    const SubmodularCheckOptions& opts, Recorder& rec) {
  Rng rng = MakeRng(opts.seed, "check_evaluator");
  auto eval = oracle.NewEvaluator();
  const int rounds = std::max(1, std::min(opts.trials / 10, 100));
  for (int r = 0; r < rounds; ++r) {
    eval->Clear();
    std::vector<ItemId> held;
    const int steps = static_cast<int>(UniformInt(rng, 1, universe_size));
    for (int s = 0; s < steps; ++s) {
      const auto v = static_cast<ItemId>(UniformInt(rng, 0, universe_size - 1));
      std::vector<int> x(held.begin(), held.end());
      std::sort(x.begin(), x.end());
      rec.Expect(-std::abs(eval->Gain(v) - oracle.Marginal(v, held)),
                 Kind::kMarginal, x, x, v);
      eval->Add(v);
      held.push_back(v);
      rec.Expect(-std::abs(eval->value() - oracle.Value(held)), Kind::kMarginal,
                 x, WithElement(x, v), v);
    }
  }
}

}  // namespace

std::string ElementString(ItemId v) { return std::to_string(v); }

std::string ElementString(const ExtendedElement& e) {
  return "(" + std::to_string(e.item) + "," + std::to_string(e.rank) + ")";
}

std::string SubmodularViolation::Describe() const {
  std::ostringstream out;
  auto set = [&](const std::vector<int>& s) {
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << '}';
  };
  switch (kind) {
    case Kind::kNormalization:
      out << "normalization: f(empty) = " << magnitude;
      return out.str();
    case Kind::kMonotonicity: out << "monotonicity"; break;
    case Kind::kSubmodularity: out << "submodularity"; break;
    case Kind::kMarginal: out << "marginal mismatch"; break;
  }
  out << ": X=";
  set(x);
  out << " Y=";
  set(y);
  if (v >= 0) out << " v=" << v;
  out << " by " << magnitude;
  return out.str();
}

SubmodularReport CheckSetFunction(const IndexSetFunction& value, int m,
                                  const IndexMarginal& marginal,
                                  const SubmodularCheckOptions& options) {
  SubmodularReport report;
  Recorder rec(&report, options.max_violations);
  if (m <= options.exhaustive_limit && m <= 24 && !options.force_sampling) {
    report.exhaustive = true;
    Exhaustive(value, m, marginal, rec);
  } else {
    Sampled(value, m, marginal, options, rec);
  }
  return report;
}

SubmodularReport CheckSubmodular(const SubmodularOracle& oracle,
                                 int universe_size,
                                 const SubmodularCheckOptions& options) {
  auto items = [](std::span<const int> s) {
    return std::vector<ItemId>(s.begin(), s.end());
  };
  SubmodularReport report = CheckSetFunction(
      [&](std::span<const int> s) { return oracle.Value(items(s)); },
      universe_size,
      [&](int v, std::span<const int> s) { return oracle.Marginal(v, items(s)); },
      options);
  if (universe_size > 0) {
    Recorder rec(&report, options.max_violations);
    CheckEvaluator(oracle, universe_size, options, rec);
  }
  return report;
}

SubmodularReport CheckLiftedSubmodular(const LiftedObjective& g,
                                       std::span<const ExtendedElement> ground,
                                       const SubmodularCheckOptions& options) {
  auto lift = [&](std::span<const int> s) {
    std::vector<ExtendedElement> out;
    out.reserve(s.size());
    for (int i : s) out.push_back(ground[static_cast<std::size_t>(i)]);
    return out;
  };
  return CheckSetFunction(
      [&](std::span<const int> s) { return g.Value(lift(s)); },
      static_cast<int>(ground.size()),
      [&](int v, std::span<const int> s) {
        return g.Marginal(ground[static_cast<std::size_t>(v)], lift(s));
      },
      options);
}

std::vector<ExtendedElement> LiftedGround(const LiftedObjective& g,
                                          int n_items) {
  std::vector<ExtendedElement> ground;
  for (ItemId v = 0; v < n_items; ++v) {
    for (Rank t : g.ranks()) ground.push_back({v, t});
  }
  return ground;
}

}  // namespace msr
