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
#include "msr/brute_force.h"
#include "msr/greedy.h"
#include "msr/objective.h"
#include "msr/scenarios.h"
#include "msr/stream.h"
#include "test_util.h"

namespace msr {
namespace {

using namespace msr::testing;

TEST(GreedyOfflineTest, TrapInstance) {
  const Instance inst = GreedyTrapInstance();
  const auto seq = GreedyOffline(inst);
  // Rank 1: c gains 1 against 0.5 for a or b. Rank 2: only f2 is active and
  // already covered, so the lowest unused id (a) fills it.
  EXPECT_EQ(seq, Seq({c, a}));
  EXPECT_DOUBLE_EQ(Evaluate(inst, seq), 1.0);
  EXPECT_DOUBLE_EQ(BruteForce(inst).opt_value, 1.5);
}

TEST(GreedyOfflineTest, SingleDemandSingleStep) {
  const Instance inst = MakeInstance(2, {MakeDemand(Coverage(2, {a}), 1)});
  const auto seq = GreedyOffline(inst);
  EXPECT_EQ(seq, Seq({a}));
  EXPECT_EQ(Evaluate(inst, seq), 1.0);
  EXPECT_EQ(BruteForce(inst).opt_value, 1.0);
}

TEST(GreedyOfflineTest, RankWithoutActiveDemandStaysEmpty) {
  const Instance inst = MakeInstance(
      2, {MakeDemand(Coverage(2, {b}), 1, 0, std::vector<Rank>{2})}, Mode::kMsra);
  const auto seq = GreedyOffline(inst);
  EXPECT_FALSE(seq.At(1).has_value());
  EXPECT_EQ(seq.At(2), b);
}

TEST(GreedyOfflineTest, RespectsBaseMatroid) {
  Instance inst = MakeInstance(3, {MakeDemand(Modular({3.0, 2.0, 1.0}), 3)});
  inst.base_matroid = std::make_shared<PartitionMatroid>(
      std::vector<std::vector<ItemId>>{{a, b}}, std::vector<int>{1}, 3);
  const auto seq = GreedyOffline(inst);
  EXPECT_EQ(seq, Seq({a, c}));
}

TEST(GreedyOfflineTest, RefusesMsrf) {
  const Instance inst =
      MakeInstance(2, {MakeDemand(Coverage(2, {a}), 1, 1)}, Mode::kMsrf, true);
  EXPECT_EQ(CodeOf([&] { GreedyOffline(inst); }), ErrorCode::kConfig);
}

TEST(GreedyMsrfTest, TwoStepsTwoTargets) {
  const ItemId x = 0, y = 1;
  const Instance inst = MakeInstance(
      2, {MakeDemand(Coverage(2, {x}), 2, 1), MakeDemand(Coverage(2, {y}), 2, 2)},
      Mode::kMsrf, true);
  const auto seq = GreedyMsrf(inst);
  EXPECT_EQ(seq, Seq({x, y}));
  EXPECT_EQ(Evaluate(inst, seq), 2.0);
  EXPECT_EQ(BruteForce(inst).opt_value, 2.0);
}

TEST(GreedyMsrfTest, ReusesItems) {
  const ItemId x = 0;
  const Instance inst = MakeInstance(
      2, {MakeDemand(Coverage(2, {x}), 1, 1), MakeDemand(Coverage(2, {x}), 2, 2)},
      Mode::kMsrf, true);
  const auto seq = GreedyMsrf(inst);
  EXPECT_EQ(seq, Seq({x, x}));
  EXPECT_EQ(Evaluate(inst, seq), 2.0);
}

TEST(GreedyMsrfTest, OnlineSelectionWithReuse) {
  Instance inst = GenOnlineSelection(std::vector<double>{1, 3, 2});
  inst.allow_reuse = true;
  const auto seq = GreedyMsrf(inst);
  EXPECT_EQ(seq, Seq({0, 0, 0}));
  EXPECT_EQ(Evaluate(inst, seq), 6.0);
  EXPECT_EQ(BruteForce(inst).opt_value, 6.0);
}

TEST(GreedyMsrfTest, RefusesWithoutReuseUnlessForced) {
  const Instance inst = GenOnlineSelection(std::vector<double>{1, 3, 2});
  try {
    GreedyMsrf(inst);
    FAIL() << "expected a refusal";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
    EXPECT_NE(std::string(e.what()).find("o(n)"), std::string::npos);
  }
  const auto seq = GreedyMsrf(inst, GreedyMsrfOptions{true});
  EXPECT_FALSE(seq.HasDuplicates(inst.dummy()));
  // Greedy grabs v at step 1 and has nothing left for the better steps.
  EXPECT_EQ(Evaluate(inst, seq), 1.0);
}

TEST(GreedyMsrfTest, EmptyActiveSetPlacesNothing) {
  const Instance inst =
      MakeInstance(2, {MakeDemand(Coverage(2, {b}), 2, 2)}, Mode::kMsrf, true);
  const auto seq = GreedyMsrf(inst);
  EXPECT_FALSE(seq.At(1).has_value() && *seq.At(1) != inst.dummy());
  EXPECT_EQ(seq.At(2), b);
}

TEST(GreedyMsrfTest, BatchesDecideOnlyOnWhatArrived) {
  // f2 arrives at step 2, so step 1 cannot anticipate it.
  FunctionBatch first{1, {MakeDemand(Modular({1.0, 0.5}), 2, 1)}};
  FunctionBatch second{2, {MakeDemand(Modular({0.0, 5.0}), 2, 2)}};
  const std::vector<FunctionBatch> stream = {first, second};
  const auto seq = GreedyMsrf(stream, 2, true);
  EXPECT_EQ(seq, Seq({a, b}));
}

TEST(GreedyPropertyTest, RunningObjectiveNeverDecreases) {
  SmallInstanceOptions opts;
  opts.mode = Mode::kMsrf;
  opts.allow_reuse = true;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Instance inst = GenRandomSmall(opts, 41, i);
    const auto seq = GreedyMsrf(inst);
    double last = 0.0;
    for (Rank t = 1; t <= seq.max_rank(); ++t) {
      // Σ_f f(σ[t(f) : min(t, k(f))]) over demands that arrived by t.
      SlotAssignment prefix;
      for (const auto& [r, v] : seq.entries()) {
        if (r <= t) prefix.Assign(r, v);
      }
      double running = 0.0;
      for (const Demand& dm : inst.demands) {
        if (dm.ArrivalStep() <= t) {
          running += dm.weight *
                     dm.oracle->Value(prefix.ItemsInWindow(dm.ArrivalStep(), dm.budget));
        }
      }
      EXPECT_GE(running, last - kTolerance);
      last = running;
    }
  }
}

TEST(GreedyPropertyTest, Deterministic) {
  SmallInstanceOptions opts;
  for (std::uint64_t i = 0; i < 30; ++i) {
    const Instance inst = GenRandomSmall(opts, 42, i);
    EXPECT_EQ(GreedyOffline(inst), GreedyOffline(inst));
  }
}

}  // namespace
}  // namespace msr
