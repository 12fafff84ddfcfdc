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

#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "msr/scenarios.h"
#include "msr/serialization.h"
#include "msr_app/app.h"
#include "test_util.h"

namespace msr {
namespace {

using namespace msr::testing;
using app::Algorithm;
using app::RunConfig;

Instance SmallMusic() {
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::kMusic;
  cfg.n_items = 20;
  cfg.n_demands = 10;
  cfg.max_budget = 3;
  cfg.horizon = 5;
  return Generate(cfg);
}

TEST(AppTest, AlgorithmNamesRoundTrip) {
  for (Algorithm alg : app::AllAlgorithms()) {
    EXPECT_EQ(app::ParseAlgorithm(app::AlgorithmName(alg)), alg);
  }
  EXPECT_EQ(CodeOf([] { app::ParseAlgorithm("quantum"); }), ErrorCode::kConfig);
}

TEST(AppTest, RunReportsObjectiveAndPerDemand) {
  RunConfig cfg;
  cfg.algorithm = Algorithm::kGreedy;
  const app::RunResult r = app::Run(GreedyTrapInstance(), cfg);
  EXPECT_EQ(r.algorithm, "greedy");
  EXPECT_EQ(r.objective, 1.0);
  ASSERT_EQ(r.per_demand.size(), 2u);
  EXPECT_EQ(r.per_demand[0] + r.per_demand[1], r.objective);
  const Json j = app::RunResultToJson(r, 3);
  EXPECT_EQ(j.at("objective"), 1.0);
  EXPECT_TRUE(j.contains("config_echo"));
}

TEST(AppTest, ReplayIsBitwiseForEveryAlgorithm) {
  SmallInstanceOptions opts;
  opts.mode = Mode::kMsra;
  const Instance msra = GenRandomSmall(opts, 5, 1);
  const Instance music = SmallMusic();
  for (Algorithm alg : app::AllAlgorithms()) {
    RunConfig cfg;
    cfg.algorithm = alg;
    cfg.seed = 17;
    if (alg == Algorithm::kLoopTopK) cfg.k_loop = 2;
    const Instance& inst =
        alg == Algorithm::kGreedyMsrf || alg == Algorithm::kLoopTopK ? music
                                                                        : msra;
    if (alg == Algorithm::kBrute && inst.n_items > 7) continue;
    const app::RunResult first = app::Run(inst, cfg);
    const Json echo = Json::parse(first.config_echo.dump());
    const app::RunResult again = app::Replay(echo);
    EXPECT_EQ(again.objective, first.objective) << first.algorithm;
    EXPECT_EQ(again.sequence, first.sequence) << first.algorithm;
  }
}

TEST(AppTest, ModeMismatchIsRefused) {
  const Instance music = SmallMusic();
  for (Algorithm alg : {Algorithm::kGreedy, Algorithm::kExchange}) {
    RunConfig cfg;
    cfg.algorithm = alg;
    EXPECT_EQ(CodeOf([&] { app::Run(music, cfg); }), ErrorCode::kConfig);
  }
  RunConfig cfg;
  cfg.algorithm = Algorithm::kGreedyMsrf;
  EXPECT_EQ(CodeOf([&] { app::Run(GreedyTrapInstance(), cfg); }),
            ErrorCode::kConfig);
}

TEST(AppTest, RunConfigJsonRoundTrip) {
  RunConfig cfg;
  cfg.algorithm = Algorithm::kExchange;
  cfg.seed = 99;
  cfg.threshold = 3.0;
  cfg.placement = Placement::kBestGain;
  cfg.item_stream = {2, 0, 1};
  const Json j = app::RunConfigToJson(cfg);
  EXPECT_EQ(app::RunConfigToJson(app::RunConfigFromJson(j)), j);
}

TEST(AppTest, ParseSweepForms) {
  auto s = app::ParseSweep("max_budget=1..5 step 2");
  EXPECT_EQ(s.param, "max_budget");
  EXPECT_EQ(s.values, (std::vector<double>{1, 3, 5}));
  s = app::ParseSweep("max_budget=1..3");
  EXPECT_EQ(s.values, (std::vector<double>{1, 2, 3}));
  s = app::ParseSweep("k_loop=1,5,10");
  EXPECT_EQ(s.values, (std::vector<double>{1, 5, 10}));
  EXPECT_TRUE(app::IsRunParameter("k_loop"));
  EXPECT_FALSE(app::IsRunParameter("max_budget"));
  EXPECT_EQ(CodeOf([] { app::ParseSweep("max_budget"); }), ErrorCode::kConfig);
}

TEST(AppTest, SweepWritesOneRowPerCombination) {
  std::vector<RunConfig> runs(3);
  runs[0].algorithm = Algorithm::kGreedyMsrf;
  runs[1].algorithm = Algorithm::kRandom;
  runs[2].algorithm = Algorithm::kLoopTopK;
  const auto rows = app::RunSweep(SmallMusic(), runs,
                                  app::ParseSweep("max_budget=1,2"), 2, 7);
  // 2 values x 2 repeats x (greedy_msrf + random + 4 loop lengths).
  EXPECT_EQ(rows.size(), 2u * 2u * (2u + app::kDefaultLoopLengths.size()));
  std::set<std::string> names;
  for (const auto& r : rows) names.insert(r.algorithm);
  EXPECT_TRUE(names.count("looptopk_k5"));
  std::ostringstream csv;
  app::WriteSweepCsv(csv, rows);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')),
            "param,value,repeat,seed,algorithm,objective,wall_time_ms");
  // Same inputs, same numbers.
  const auto again = app::RunSweep(SmallMusic(), runs,
                                   app::ParseSweep("max_budget=1,2"), 2, 7);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].objective, again[i].objective);
  }
}

TEST(AppTest, SuitesPass) {
  app::SuiteOptions opts;
  opts.count = 10;
  for (auto suite : {app::Suite::kFunctions, app::Suite::kMatroids,
                     app::Suite::kRatios}) {
    const app::SuiteOutcome out = app::RunSuite(suite, opts);
    EXPECT_TRUE(out.ok) << app::SuiteName(suite);
    EXPECT_FALSE(out.lines.empty());
  }
}

}  // namespace
}  // namespace msr
