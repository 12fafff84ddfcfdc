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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "msr/objective.h"
#include "msr/scenarios.h"
#include "msr/serialization.h"
#include "msr/stream.h"
#include "test_util.h"

namespace msr {
namespace {

using namespace msr::testing;

TEST(SerializationTest, RandomInstancesRoundTrip) {
  for (Mode mode : {Mode::kMsr, Mode::kMsrf, Mode::kMsra, Mode::kMsri}) {
    SmallInstanceOptions opts;
    opts.mode = mode;
    opts.allow_reuse = mode == Mode::kMsrf;
    opts.base = SmallInstanceOptions::Base::kPartition;
    for (std::uint64_t i = 0; i < 40; ++i) {
      const Instance inst = GenRandomSmall(opts, 91, i);
      const Json j = InstanceToJson(inst);
      const Instance back = InstanceFromJson(Json::parse(j.dump()));
      EXPECT_EQ(InstanceToJson(back), j);
      // Same objective on a fixed sequence.
      std::vector<ItemId> dense;
      for (ItemId v = 0; v < inst.n_items; ++v) dense.push_back(v);
      EXPECT_EQ(Evaluate(inst, Seq(dense)), Evaluate(back, Seq(dense)));
    }
  }
}

TEST(SerializationTest, ParamsMayBeTopLevel) {
  const Json j = Json::parse(R"({
    "n_items": 3, "allow_reuse": false, "mode": "msr",
    "demands": [
      {"type": "coverage", "target": [0, 1], "budget": 1},
      {"type": "modular", "params": {"weights": {"2": 4.0}}, "budget": 2,
       "weight": 0.5}
    ]})");
  const Instance inst = InstanceFromJson(j);
  ASSERT_EQ(inst.demands.size(), 2u);
  EXPECT_EQ(Evaluate(inst, Seq({a, c})), 0.5 + 2.0);
}

TEST(SerializationTest, DenseModularWeights) {
  LoadContext ctx;
  const auto f = OracleFromJson(
      Json::parse(R"({"type":"modular","weights":[1,2,3]})"), 3, ctx);
  EXPECT_EQ(f->Value(std::vector<ItemId>{0, 2}), 4.0);
}

TEST(SerializationTest, NeighborhoodFromEdgesFile) {
  const auto dir = std::filesystem::temp_directory_path() / "msr_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "g.txt");
    out << "# path\n0 1\n1 2\n";
  }
  LoadContext ctx;
  ctx.base_dir = dir;
  const auto f = OracleFromJson(
      Json::parse(R"({"type":"neighborhood","edges_file":"g.txt","group":[1]})"),
      3, ctx);
  EXPECT_EQ(f->Value(std::vector<ItemId>{1}), 1.0);
  EXPECT_EQ(f->Value(std::vector<ItemId>{0}), 1.0);
  EXPECT_EQ(f->Value(std::vector<ItemId>{2}), 1.0);
  const auto g = OracleFromJson(
      Json::parse(R"({"type":"neighborhood","edges_file":"g.txt","group":[0]})"),
      3, ctx);
  EXPECT_EQ(ctx.graphs.size(), 1u);
  EXPECT_EQ(g->Value(std::vector<ItemId>{2}), 0.0);
  std::filesystem::remove_all(dir);
}

TEST(SerializationTest, EdgeListLabels) {
  const auto dir = std::filesystem::temp_directory_path() / "msr_edges_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "num.txt");
    out << "0 4\n";
    std::ofstream named(dir / "named.txt");
    named << "x y\ny z\n";
  }
  const EdgeList num = ReadEdgeList(dir / "num.txt");
  EXPECT_EQ(num.num_nodes, 5);
  EXPECT_EQ(ReadEdgeList(dir / "num.txt", 9).num_nodes, 9);
  const EdgeList named = ReadEdgeList(dir / "named.txt");
  EXPECT_EQ(named.num_nodes, 3);
  EXPECT_EQ(named.labels, (std::vector<std::string>{"x", "y", "z"}));
  std::filesystem::remove_all(dir);
}

TEST(SerializationTest, MalformedDocumentsThrowParse) {
  EXPECT_EQ(CodeOf([] { InstanceFromJson(Json::parse(R"({"mode":"msr"})")); }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] {
              InstanceFromJson(Json::parse(
                  R"({"n_items":2,"allow_reuse":false,"mode":"msr",
                      "demands":[{"type":"volcano","budget":1}]})"));
            }),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] {
              InstanceFromJson(Json::parse(
                  R"({"n_items":"two","allow_reuse":false,"mode":"msr",
                      "demands":[]})"));
            }),
            ErrorCode::kParse);
}

TEST(SerializationTest, MatroidsRoundTrip) {
  const Json j = Json::parse(R"({"type":"intersection","parts":[
      {"type":"uniform","cap":2},
      {"type":"partition","groups":[[0,1],[2]],"caps":[1,1]}]})");
  const auto m = MatroidFromJson(j, 4);
  EXPECT_EQ(m->family(), "intersection");
  EXPECT_EQ(MatroidToJson(*MatroidFromJson(MatroidToJson(*m), 4)),
            MatroidToJson(*m));
  EXPECT_TRUE(m->IsIndependent(std::vector<ItemId>{0, 2}));
  EXPECT_FALSE(m->IsIndependent(std::vector<ItemId>{0, 1}));
  EXPECT_FALSE(m->IsIndependent(std::vector<ItemId>{0, 2, 3}));
}

TEST(SerializationTest, SequencesUseNullForGaps) {
  SlotAssignment s;
  s.Assign(1, 2);
  s.Assign(3, 0);
  const Json j = SequenceToJson(s, 5);
  EXPECT_EQ(j, Json::parse("[2, null, 0]"));
  EXPECT_EQ(SequenceFromJson(j), s);
}

TEST(SerializationTest, SaveAndLoadFile) {
  const auto path = std::filesystem::temp_directory_path() / "msr_save_test.json";
  const Instance inst = GreedyTrapInstance();
  SaveInstance(inst, path);
  EXPECT_EQ(InstanceToJson(LoadInstance(path)), InstanceToJson(inst));
  std::filesystem::remove(path);
  EXPECT_THROW(LoadInstance(path), Error);
}

TEST(StreamTest, ParsesBatchesAndArrivals) {
  std::istringstream in(
      "# demo\n"
      "F 1 {\"type\":\"coverage\",\"target\":[0],\"budget\":2}\n"
      "F 1 {\"type\":\"coverage\",\"target\":[1],\"budget\":1}\n"
      "I 0\n"
      "\n"
      "F 3 {\"type\":\"coverage\",\"target\":[1],\"budget\":4}\n"
      "I 1\n");
  const auto events = ParseStream(in, 2);
  ASSERT_EQ(events.size(), 4u);
  const auto& batch = std::get<FunctionBatch>(events[0]);
  EXPECT_EQ(batch.step, 1);
  EXPECT_EQ(batch.demands.size(), 2u);
  EXPECT_EQ(std::get<ItemArrival>(events[1]).item, 0);
  EXPECT_EQ(std::get<FunctionBatch>(events[2]).step, 3);
  EXPECT_EQ(std::get<ItemArrival>(events[3]).item, 1);
}

TEST(StreamTest, RejectsBadLines) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    ParseStream(in, 2);
  };
  EXPECT_EQ(CodeOf([&] { parse("X 1\n"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([&] { parse("I nine\n"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([&] { parse("F 1 {not json}\n"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([&] {
              parse("F 2 {\"type\":\"coverage\",\"target\":[0],\"budget\":2}\n"
                    "I 0\n"
                    "F 1 {\"type\":\"coverage\",\"target\":[0],\"budget\":2}\n");
            }),
            ErrorCode::kParse);
}

TEST(StreamTest, BatchesFromInstanceGroupByArrival) {
  const Instance inst = MakeInstance(
      2,
      {MakeDemand(Coverage(2, {a}), 3, 2), MakeDemand(Coverage(2, {b}), 1, 1),
       MakeDemand(Coverage(2, {a}), 4, 2)},
      Mode::kMsrf, true);
  const auto batches = BatchesFromInstance(inst);
  ASSERT_EQ(batches.size(), 2u);
  EXPECT_EQ(batches[0].step, 1);
  EXPECT_EQ(batches[0].demands.size(), 1u);
  EXPECT_EQ(batches[1].step, 2);
  EXPECT_EQ(batches[1].demands.size(), 2u);
}

}  // namespace
}  // namespace msr
