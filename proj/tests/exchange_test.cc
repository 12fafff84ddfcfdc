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
#include "msr/exchange.h"
#include "msr/objective.h"
#include "msr/scenarios.h"
#include "test_util.h"

namespace msr {
namespace {

using namespace msr::testing;

Instance OneSlotModular(double wa, double wb) {
  return MakeInstance(2, {MakeDemand(Modular({wa, wb}), 1, 0, std::vector<Rank>{1})},
                      Mode::kMsri);
}

TEST(ExchangeTest, SwapWhenTwiceAsValuable) {
  const Instance inst = OneSlotModular(1.0, 3.0);
  ExchangeState state(inst.demands, inst.mode, inst.n_items, nullptr);
  state.Process(a);
  EXPECT_EQ(state.frozen_weights().at({a, 1}), 1.0);
  state.Process(b);
  EXPECT_EQ(state.Elements(), (std::vector<ExtendedElement>{{b, 1}}));
  EXPECT_EQ(state.stats().swaps, 1u);
  EXPECT_EQ(Evaluate(inst, state.Sequence()), 3.0);
  EXPECT_EQ(BruteForce(inst).opt_value, 3.0);
}

TEST(ExchangeTest, KeepWhenNotTwiceAsValuable) {
  const Instance inst = OneSlotModular(1.0, 1.5);
  const auto seq = ExchangeMsri(inst);
  EXPECT_EQ(seq, Seq({a}));
  EXPECT_EQ(Evaluate(inst, seq), 1.0);
  const double opt = BruteForce(inst).opt_value;
  EXPECT_EQ(opt, 1.5);
  EXPECT_GE(Evaluate(inst, seq), opt / 8);
}

TEST(ExchangeTest, ZeroGainItemsAreDiscarded) {
  const Instance inst = MakeInstance(
      3, {MakeDemand(Coverage(3, {a, b}), 2, 0, std::vector<Rank>{1, 2})},
      Mode::kMsri);
  ExchangeState state(inst.demands, inst.mode, inst.n_items, nullptr);
  state.Process(c);
  EXPECT_TRUE(state.Elements().empty());
  state.Process(a);
  state.Process(b);
  EXPECT_EQ(state.Sequence(), Seq({a, b}));
  EXPECT_EQ(Evaluate(inst, state.Sequence()), 1.0);
  EXPECT_EQ(BruteForce(inst).opt_value, 1.0);
}

TEST(ExchangeTest, StreamOrderArgument) {
  const Instance inst = MakeInstance(
      3, {MakeDemand(Coverage(3, {a, b}), 2, 0, std::vector<Rank>{1, 2})},
      Mode::kMsri);
  const std::vector<ItemId> stream = {c, a, b};
  EXPECT_EQ(ExchangeMsri(inst, stream), Seq({a, b}));
}

TEST(ExchangeTest, HeldItemsAreSkippedOnRepeat) {
  const Instance inst = OneSlotModular(1.0, 0.0);
  ExchangeState state(inst.demands, inst.mode, inst.n_items, nullptr);
  state.Process(a);
  state.Process(a);
  EXPECT_EQ(state.stats().inserts, 1u);
  EXPECT_EQ(state.Elements().size(), 1u);
}

TEST(ExchangeTest, UnknownItemIsMalformed) {
  const Instance inst = OneSlotModular(1.0, 1.0);
  ExchangeState state(inst.demands, inst.mode, inst.n_items, nullptr);
  EXPECT_EQ(CodeOf([&] { state.Process(5); }), ErrorCode::kMalformedInput);
}

TEST(ExchangeTest, RefusesMsrf) {
  const Instance inst =
      MakeInstance(2, {MakeDemand(Coverage(2, {a}), 1, 1)}, Mode::kMsrf, true);
  EXPECT_EQ(CodeOf([&] { ExchangeMsri(inst); }), ErrorCode::kConfig);
}

TEST(ExchangeTest, PrefixInstancesAreCompacted) {
  // Item c is useful only to the wide demand and lands at a later rank; the
  // result for a prefix instance is dense.
  const Instance inst = MakeInstance(
      3, {MakeDemand(Coverage(3, {c}), 3), MakeDemand(Coverage(3, {a}), 1)});
  const auto seq = ExchangeMsri(inst);
  EXPECT_EQ(static_cast<std::size_t>(seq.max_rank()), seq.size());
}

TEST(ExchangeTest, BaseMatroidConflictEvictsLighterItem) {
  Instance inst = MakeInstance(
      3, {MakeDemand(Modular({1.0, 0.0, 4.0}), 2, 0, std::vector<Rank>{1, 2})},
      Mode::kMsri);
  inst.base_matroid = std::make_shared<UniformMatroid>(1, 3);
  const auto seq = ExchangeMsri(inst);
  EXPECT_EQ(seq.size(), 1u);
  EXPECT_EQ(Evaluate(inst, seq), 4.0);
}

TEST(ExchangeTest, PlacementModes) {
  // Rank 1 serves a cheap demand, rank 2 a rich one.
  const Instance inst = MakeInstance(
      1, {MakeDemand(Modular({1.0}), 1, 0, std::vector<Rank>{1}),
          MakeDemand(Modular({5.0}), 1, 0, std::vector<Rank>{2})},
      Mode::kMsri);
  ExchangeOptions first;
  first.placement = Placement::kFirstSuccess;
  ExchangeOptions best;
  best.placement = Placement::kBestGain;
  EXPECT_EQ(ExchangeMsri(inst, {}, first).At(1), a);
  EXPECT_EQ(ExchangeMsri(inst, {}, best).At(2), a);
  // (a,1) goes in first, then (a,2) buys it out: 5 >= 2 * 1.
  ExchangeState state(inst.demands, inst.mode, inst.n_items, nullptr);
  state.Process(a);
  EXPECT_EQ(state.Elements(), (std::vector<ExtendedElement>{{a, 2}}));
  EXPECT_EQ(state.stats().inserts, 1u);
  EXPECT_EQ(state.stats().swaps, 1u);
}

// Stopping at the first rank that accepts an item can fall below OPT/8:
// here a lands on the cheap slot 3 and is never offered slot 5.
TEST(ExchangeTest, FirstSuccessMissesLaterRank) {
  const Instance inst = MakeInstance(
      3, {MakeDemand(Coverage(3, {a, c}), 1, 0, std::vector<Rank>{3}, 0.5),
          MakeDemand(Coverage(3, {a}), 1, 0, std::vector<Rank>{5}, 2.0)},
      Mode::kMsra);
  const double opt = BruteForce(inst).opt_value;
  EXPECT_EQ(opt, 2.25);
  ExchangeOptions first;
  first.placement = Placement::kFirstSuccess;
  EXPECT_EQ(Evaluate(inst, ExchangeMsri(inst, {}, first)), 0.25);
  const double every = Evaluate(inst, ExchangeMsri(inst));
  EXPECT_EQ(every, 2.25);
  EXPECT_GE(every, opt / 8);
}

// Invariants after every event on random instances, including
// independence, frozen weights on the solution only and non-negative, the
// memory bound, and the swap ledger rule.
TEST(ExchangePropertyTest, InvariantsHoldAfterEveryEvent) {
  for (auto base : {SmallInstanceOptions::Base::kNone,
                    SmallInstanceOptions::Base::kPartition,
                    SmallInstanceOptions::Base::kUniform}) {
    SmallInstanceOptions opts;
    opts.mode = Mode::kMsri;
    opts.base = base;
    for (std::uint64_t i = 0; i < 80; ++i) {
      const Instance inst = GenRandomSmall(opts, 51, i);
      ExchangeState state(inst.demands, inst.mode, inst.n_items, inst.base_matroid);
      std::size_t slots = 0;
      for (const Demand& dm : inst.demands) slots += dm.Slots().size();
      for (ItemId v = 0; v < inst.n_items; ++v) {
        const double before = state.FrozenTotal();
        const auto swaps_before = state.stats().swaps;
        state.Process(v);
        const auto elems = state.Elements();
        EXPECT_TRUE(state.matroid().IsIndependent(elems));
        EXPECT_EQ(state.frozen_weights().size(), elems.size());
        for (const auto& [e, w] : state.frozen_weights()) EXPECT_GE(w, 0.0);
        EXPECT_LE(elems.size(), state.capacity());
        EXPECT_LE(state.capacity(), slots);
        if (state.stats().swaps > swaps_before) {
          // w(e) >= 2 * evicted, so the total cannot drop.
          EXPECT_GE(state.FrozenTotal(), before - kTolerance);
        }
      }
    }
  }
}

TEST(ExchangePropertyTest, MeetsFloorOnRandomInstances) {
  // p_total is 2 without a base and with a single-matroid base.
  for (auto base : {SmallInstanceOptions::Base::kNone,
                    SmallInstanceOptions::Base::kPartition,
                    SmallInstanceOptions::Base::kUniform}) {
    SmallInstanceOptions opts;
    opts.mode = Mode::kMsra;
    opts.base = base;
    for (std::uint64_t i = 0; i < 150; ++i) {
      const Instance inst = GenRandomSmall(opts, 52, i);
      const double alg = Evaluate(inst, ExchangeMsri(inst));
      const double opt = BruteForce(inst).opt_value;
      EXPECT_GE(alg, opt / 8 - kTolerance) << "instance " << i;
    }
  }
}

}  // namespace
}  // namespace msr
