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

#include <algorithm>

#include "gtest/gtest.h"
#include "msr/lifted_objective.h"
#include "msr/property_checks.h"
#include "msr/scenarios.h"
#include "test_util.h"

namespace msr {
namespace {

using namespace msr::testing;

// |S|^2: monotone but supermodular.
class SquareSize final : public SubmodularOracle {
 public:
  explicit SquareSize(int n) : SubmodularOracle(n) {}
  std::string_view family() const override { return "square"; }
  double SetValue(std::span<const ItemId> set) const override {
    const double k = static_cast<double>(set.size());
    return k * k;
  }
};

TEST(PropertyChecksTest, CoverageIsSubmodularExhaustively) {
  const auto f = Coverage(6, {a, c, 4});
  const SubmodularReport report = CheckSubmodular(*f, 6);
  EXPECT_TRUE(report.exhaustive);
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.checks, 0);
}

TEST(PropertyChecksTest, SquareSizeFailsWithWitness) {
  const SquareSize f(4);
  for (bool sampling : {false, true}) {
    SubmodularCheckOptions opts;
    opts.force_sampling = sampling;
    const SubmodularReport report = CheckSubmodular(f, 4, opts);
    ASSERT_FALSE(report.ok());
    const auto& v = report.violations.front();
    EXPECT_EQ(v.kind, SubmodularViolation::Kind::kSubmodularity);
    EXPECT_GT(v.magnitude, kTolerance);
    EXPECT_FALSE(v.Describe().empty());
    EXPECT_LE(report.violations.size(), opts.max_violations);
  }
}

TEST(PropertyChecksTest, DecreasingFunctionFailsMonotonicity) {
  const SubmodularReport report = CheckSetFunction(
      [](std::span<const int> s) { return -static_cast<double>(s.size()); }, 3,
      [](int, std::span<const int>) { return -1.0; });
  ASSERT_FALSE(report.ok());
  EXPECT_TRUE(std::any_of(report.violations.begin(), report.violations.end(),
                          [](const SubmodularViolation& v) {
                            return v.kind ==
                                   SubmodularViolation::Kind::kMonotonicity;
                          }));
}

TEST(PropertyChecksTest, LiftedObjectiveOfSmallInstancesIsSubmodular) {
  SmallInstanceOptions opts;
  opts.mode = Mode::kMsra;
  opts.max_items = 3;
  opts.max_slot = 3;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Instance inst = GenRandomSmall(opts, 81, i);
    const LiftedObjective g(inst.demands, inst.mode);
    const auto ground = LiftedGround(g, inst.n_items);
    ASSERT_LE(ground.size(), 12u);
    const SubmodularReport report = CheckLiftedSubmodular(g, ground);
    EXPECT_TRUE(report.exhaustive);
    EXPECT_TRUE(report.ok()) << report.violations.front().Describe();
  }
}

TEST(PropertyChecksTest, SetStringFormats) {
  const std::vector<ItemId> items = {1, 2};
  EXPECT_EQ(SetString<ItemId>(items), "{" + ElementString(1) + ", " +
                                          ElementString(2) + "}");
  EXPECT_EQ(SetString<ItemId>(std::vector<ItemId>{}), "{}");
}

TEST(PropertyChecksTest, UniformMatroidPassesAxioms) {
  const UniformMatroid m(2, 5);
  const std::vector<ItemId> ground = {0, 1, 2, 3, 4};
  const MatroidReport report = CheckMatroid<ItemId>(m, ground);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.exhaustive);
}

}  // namespace
}  // namespace msr
