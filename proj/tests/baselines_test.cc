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

#include "gtest/gtest.h"
#include "msr/baselines.h"
#include "msr/objective.h"
#include "msr/scenarios.h"
#include "test_util.h"

namespace msr {
namespace {

using namespace msr::testing;

Instance ThreeModular(bool reuse, int budget) {
  return MakeInstance(3, {MakeDemand(Modular({1.0, 3.0, 2.0}), budget)},
                      Mode::kMsr, reuse);
}

TEST(BaselinesTest, TopKOrdersBySingletonUtility) {
  const Instance inst = ThreeModular(false, 3);
  EXPECT_EQ(SingletonUtilities(inst), (std::vector<double>{1.0, 3.0, 2.0}));
  EXPECT_EQ(RunBaseline(BaselinePolicy::kTopK, inst, 0), Seq({b, c, a}));
}

TEST(BaselinesTest, TopKStopsAtRelevantRanks) {
  EXPECT_EQ(RunBaseline(BaselinePolicy::kTopK, ThreeModular(false, 2), 0),
            Seq({b, c}));
}

TEST(BaselinesTest, LoopTopKCycles) {
  const Instance inst = MakeInstance(
      3, {MakeDemand(Modular({1.0, 3.0, 2.0}), 4, 1)}, Mode::kMsrf, true);
  EXPECT_EQ(RunBaseline(BaselinePolicy::kLoopTopK, inst, 0, 2),
            Seq({b, c, b, c}));
}

TEST(BaselinesTest, LoopTopKNeedsK) {
  EXPECT_EQ(CodeOf([] {
              RunBaseline(BaselinePolicy::kLoopTopK, ThreeModular(true, 3), 0);
            }),
            ErrorCode::kConfig);
  EXPECT_EQ(CodeOf([] {
              RunBaseline(BaselinePolicy::kLoopTopK, ThreeModular(true, 3), 0, 0);
            }),
            ErrorCode::kConfig);
}

TEST(BaselinesTest, LoopTopKNeedsReuseToRepeat) {
  EXPECT_EQ(CodeOf([] {
              RunBaseline(BaselinePolicy::kLoopTopK, ThreeModular(false, 3), 0, 1);
            }),
            ErrorCode::kConfig);
}

TEST(BaselinesTest, RandomIsDeterministicPerSeed) {
  const Instance inst = ThreeModular(false, 3);
  const auto s1 = RunBaseline(BaselinePolicy::kRandom, inst, 9);
  EXPECT_EQ(s1, RunBaseline(BaselinePolicy::kRandom, inst, 9));
  EXPECT_FALSE(s1.HasDuplicates(inst.dummy()));
  EXPECT_EQ(s1.size(), 3u);
}

TEST(BaselinesTest, Names) {
  EXPECT_EQ(BaselineName(BaselinePolicy::kRandom), "random");
  EXPECT_EQ(BaselineName(BaselinePolicy::kTopK), "topk");
  EXPECT_EQ(BaselineName(BaselinePolicy::kLoopTopK), "looptopk");
}

TEST(BaselinesPropertyTest, OutputsAreValidSequences) {
  for (auto mode : {Mode::kMsr, Mode::kMsra, Mode::kMsri}) {
    SmallInstanceOptions opts;
    opts.mode = mode;
    opts.base = SmallInstanceOptions::Base::kPartition;
    for (std::uint64_t i = 0; i < 50; ++i) {
      const Instance inst = GenRandomSmall(opts, 61, i);
      for (auto policy : {BaselinePolicy::kRandom, BaselinePolicy::kTopK}) {
        const auto seq = RunBaseline(policy, inst, i);
        EXPECT_FALSE(seq.HasDuplicates(inst.dummy()));
        EXPECT_LE(seq.max_rank(), inst.MaxRelevantRank());
        EXPECT_NO_THROW(Evaluate(inst, seq));
        if (inst.base_matroid) {
          std::vector<ItemId> items;
          for (const auto& [r, v] : seq.entries()) items.push_back(v);
          EXPECT_TRUE(inst.base_matroid->IsIndependent(items));
        }
      }
    }
  }
}

}  // namespace
}  // namespace msr
