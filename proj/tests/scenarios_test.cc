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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "msr/objective.h"
#include "msr/scenarios.h"
#include "msr/serialization.h"
#include "test_util.h"

namespace msr {
namespace {

using namespace msr::testing;

const CoverageFunction& AsCoverage(const Demand& d) {
  return dynamic_cast<const CoverageFunction&>(*d.oracle);
}

TEST(MusicTest, LikedSongsArePlayedMoreThanOnce) {
  std::istringstream in("u1,s1,3\nu1,s2,1\nu2,s1,2\n");
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::kMusic;
  const Instance inst = GenMusic(in, cfg);
  EXPECT_EQ(inst.n_items, 2);
  EXPECT_EQ(inst.mode, Mode::kMsrf);
  EXPECT_TRUE(inst.allow_reuse);
  ASSERT_EQ(inst.demands.size(), 2u);
  for (const Demand& d : inst.demands) {
    EXPECT_EQ(AsCoverage(d).target(), std::vector<ItemId>{0});
    EXPECT_GE(d.arrival, 1);
    EXPECT_GE(d.budget, d.arrival);
    EXPECT_LE(d.budget - d.arrival + 1, cfg.max_budget);
  }
}

TEST(MusicTest, CountsAreSummedPerUserAndSong) {
  std::istringstream in("u1\ts1\t1\nu1\ts1\t1\n");
  const Instance inst = GenMusic(in, ScenarioConfig{});
  ASSERT_EQ(inst.demands.size(), 1u);
}

TEST(MusicTest, EmptyInputGivesEmptyInstance) {
  std::istringstream in("");
  const Instance inst = GenMusic(in, ScenarioConfig{});
  EXPECT_EQ(inst.n_items, 0);
  EXPECT_TRUE(inst.demands.empty());
}

TEST(MusicTest, MalformedRowReportsLine) {
  std::istringstream in("u1,s1,3\nu1,s2,many\n");
  try {
    GenMusic(in, ScenarioConfig{});
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ScenarioTest, GenerationIsDeterministic) {
  for (auto kind : {ScenarioKind::kMusic, ScenarioKind::kViral,
                    ScenarioKind::kWebrank, ScenarioKind::kDivrec,
                    ScenarioKind::kSynthetic}) {
    ScenarioConfig cfg;
    cfg.kind = kind;
    cfg.seed = 5;
    cfg.n_items = 60;
    cfg.n_demands = 10;
    cfg.subset_size = 5;
    cfg.n_candidates = 50;
    cfg.n_bases = 10;
    const Instance first = Generate(cfg);
    const Instance second = Generate(cfg);
    EXPECT_EQ(InstanceToJson(first), InstanceToJson(second))
        << ScenarioKindName(kind);
    EXPECT_NO_THROW(first.Validate());
    EXPECT_FALSE(first.generator.is_null());
    cfg.seed = 6;
    EXPECT_NE(InstanceToJson(first), InstanceToJson(Generate(cfg)))
        << ScenarioKindName(kind);
  }
}

TEST(ScenarioTest, KindNamesRoundTrip) {
  for (auto kind : {ScenarioKind::kMusic, ScenarioKind::kViral,
                    ScenarioKind::kWebrank, ScenarioKind::kDivrec,
                    ScenarioKind::kOnlineSelection, ScenarioKind::kSynthetic}) {
    EXPECT_EQ(ParseScenarioKind(ScenarioKindName(kind)), kind);
  }
  EXPECT_EQ(CodeOf([] { ParseScenarioKind("nope"); }), ErrorCode::kConfig);
}

TEST(ScenarioTest, ConfigJsonRoundTrip) {
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::kDivrec;
  cfg.seed = 42;
  cfg.keyword = "king";
  cfg.values = {1.0, 2.0};
  const ScenarioConfig back = ScenarioConfigFromJson(ScenarioConfigToJson(cfg));
  EXPECT_EQ(ScenarioConfigToJson(back), ScenarioConfigToJson(cfg));
}

TEST(ScenarioTest, InvalidConfigIsRejected) {
  ScenarioConfig cfg;
  cfg.max_budget = 0;
  EXPECT_EQ(CodeOf([&] { Generate(cfg); }), ErrorCode::kConfig);
}

TEST(ViralTest, GroupsCoverNeighborhoods) {
  const auto dir = std::filesystem::temp_directory_path() / "msr_viral_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "edges.txt";
  {
    std::ofstream out(path);
    out << "0 1\n1 2\n2 3\n";
  }
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::kViral;
  cfg.group_probability = 1.0;
  cfg.n_demands = 3;
  const Instance inst = GenViral(path, cfg);
  EXPECT_EQ(inst.n_items, 4);
  ASSERT_EQ(inst.demands.size(), 3u);
  const auto& f = *inst.demands[0].oracle;
  // The group is every node; N[1] = {0,1,2}.
  EXPECT_EQ(f.Value(std::vector<ItemId>{1}), 0.75);
  EXPECT_EQ(f.Value(std::vector<ItemId>{0, 3}), 1.0);
  std::filesystem::remove_all(dir);
}

TEST(ViralTest, TinyProbabilityStillGivesNonEmptyGroups) {
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::kViral;
  cfg.group_probability = 0.0;
  cfg.n_items = 30;
  cfg.n_demands = 5;
  const Instance inst = Generate(cfg);
  for (const Demand& d : inst.demands) {
    EXPECT_EQ(dynamic_cast<const NeighborhoodCoverage&>(*d.oracle).group().size(),
              1u);
  }
}

TEST(WebrankTest, FiltersQueriesAndUsesPrefixSlots) {
  std::istringstream in(
      "u1,movie times,p1\n"
      "u1,weather,p2\n"
      "u2,best movie,p1\n"
      "u2,movie,p3\n");
  ScenarioConfig cfg;
  cfg.max_budget = 3;
  const Instance inst = GenWebrank(in, cfg);
  EXPECT_EQ(inst.mode, Mode::kMsra);
  EXPECT_EQ(inst.n_items, 2);
  ASSERT_EQ(inst.demands.size(), 2u);
  EXPECT_EQ(AsCoverage(inst.demands[0]).target(), std::vector<ItemId>{0});
  EXPECT_EQ(AsCoverage(inst.demands[1]).target(), (std::vector<ItemId>{0, 1}));
  for (const Demand& d : inst.demands) {
    ASSERT_TRUE(d.slots.has_value());
    EXPECT_EQ(static_cast<int>(d.slots->size()), d.budget);
    for (int r = 1; r <= d.budget; ++r) EXPECT_EQ((*d.slots)[r - 1], r);
  }
}

std::string Embeddings() {
  return "king 1 0\n"
         "queen 1 0\n"
         "apple 0 1\n"
         "prince 0.8 0.6\n";
}

TEST(DivrecTest, DemandLadder) {
  std::istringstream in(Embeddings());
  ScenarioConfig cfg;
  cfg.n_bases = 2;
  const Instance inst = GenDivrec(in, cfg);
  EXPECT_EQ(inst.mode, Mode::kMsra);
  EXPECT_EQ(inst.n_items, 3);
  ASSERT_EQ(inst.demands.size(), 8u);
  const auto& first = dynamic_cast<const DiversityRelevance&>(*inst.demands[0].oracle);
  EXPECT_EQ(inst.demands[0].weight, 0.5);
  EXPECT_EQ(first.lambda(), 0.0);
  EXPECT_EQ(inst.demands[0].budget, 5);
  const auto& last = dynamic_cast<const DiversityRelevance&>(*inst.demands[7].oracle);
  EXPECT_DOUBLE_EQ(inst.demands[7].weight, std::pow(0.5, 8));
  EXPECT_DOUBLE_EQ(last.lambda(), 7.0 / 40.0);
  EXPECT_EQ(inst.demands[7].budget, 40);
  EXPECT_EQ(last.k(), 40);
  // Candidates sorted by score: queen (0.5), prince (0.3), apple (clamped).
  EXPECT_DOUBLE_EQ(first.relevance()[0], 0.5);
  EXPECT_DOUBLE_EQ(first.relevance()[1], 0.3);
  EXPECT_EQ(first.relevance()[2], 0.0);
  for (const auto& row : first.base_similarity()) {
    for (double s : row) EXPECT_GE(s, 0.0);
  }
}

TEST(DivrecTest, ExplicitKeyword) {
  std::istringstream in(Embeddings());
  ScenarioConfig cfg;
  cfg.keyword = "apple";
  cfg.n_bases = 2;
  const Instance inst = GenDivrec(in, cfg);
  const auto& f = dynamic_cast<const DiversityRelevance&>(*inst.demands[0].oracle);
  // apple vs prince: 0.6 - 0.5.
  EXPECT_NEAR(f.relevance()[0], 0.1, 1e-12);
}

TEST(DivrecTest, MissingKeywordIsConfigError) {
  std::istringstream in(Embeddings());
  ScenarioConfig cfg;
  cfg.keyword = "emperor";
  EXPECT_EQ(CodeOf([&] { GenDivrec(in, cfg); }), ErrorCode::kConfig);
}

TEST(OnlineSelectionTest, ValueDependsOnPlacementStep) {
  const std::vector<double> values = {1.0, 3.0, 2.0};
  const Instance inst = GenOnlineSelection(values);
  EXPECT_EQ(inst.n_items, 3);
  ASSERT_EQ(inst.demands.size(), 3u);
  for (int t = 1; t <= 3; ++t) {
    EXPECT_EQ(inst.demands[t - 1].arrival, t);
    EXPECT_EQ(inst.demands[t - 1].budget, t);
  }
  SlotAssignment at2;
  at2.Assign(2, a);
  EXPECT_EQ(Evaluate(inst, at2), 3.0);
  SlotAssignment at1;
  at1.Assign(1, a);
  EXPECT_EQ(Evaluate(inst, at1), 1.0);
  EXPECT_EQ(Evaluate(inst, SlotAssignment{}), 0.0);
  // Worthless items anywhere add nothing.
  EXPECT_EQ(Evaluate(inst, Seq({b, a, c})), 3.0);
}

TEST(OnlineSelectionTest, RejectsBadValues) {
  EXPECT_EQ(CodeOf([] { GenOnlineSelection(std::vector<double>{}); }),
            ErrorCode::kConfig);
  EXPECT_EQ(CodeOf([] { GenOnlineSelection(std::vector<double>{1.0, -1.0}); }),
            ErrorCode::kConfig);
}

TEST(SyntheticTest, ShapesFollowConfig) {
  for (Mode mode : {Mode::kMsrf, Mode::kMsr, Mode::kMsra}) {
    ScenarioConfig cfg;
    cfg.mode = mode;
    cfg.n_items = 40;
    cfg.n_demands = 12;
    cfg.subset_size = 6;
    cfg.max_budget = 4;
    cfg.horizon = 10;
    const Instance inst = GenSynthetic(cfg);
    EXPECT_EQ(inst.mode, mode);
    EXPECT_EQ(inst.n_items, 40);
    ASSERT_EQ(inst.demands.size(), 12u);
    for (const Demand& d : inst.demands) {
      EXPECT_EQ(AsCoverage(d).target().size(), 6u);
      if (mode == Mode::kMsrf) {
        EXPECT_LE(d.budget - d.arrival + 1, 4);
        EXPECT_LE(d.arrival, 10);
      } else {
        EXPECT_GE(d.budget, 1);
        EXPECT_LE(d.budget, 4);
      }
    }
  }
}

TEST(RandomSmallTest, RespectsLimitsAndIsDeterministic) {
  for (Mode mode : {Mode::kMsr, Mode::kMsrf, Mode::kMsra, Mode::kMsri}) {
    SmallInstanceOptions opts;
    opts.mode = mode;
    opts.allow_reuse = mode == Mode::kMsrf;
    opts.base = SmallInstanceOptions::Base::kPartition;
    for (std::uint64_t i = 0; i < 50; ++i) {
      const Instance inst = GenRandomSmall(opts, 3, i);
      EXPECT_NO_THROW(inst.Validate());
      EXPECT_LE(inst.n_items, opts.max_items);
      EXPECT_LE(static_cast<int>(inst.demands.size()), opts.max_demands);
      EXPECT_EQ(InstanceToJson(inst), InstanceToJson(GenRandomSmall(opts, 3, i)));
    }
  }
}

}  // namespace
}  // namespace msr
