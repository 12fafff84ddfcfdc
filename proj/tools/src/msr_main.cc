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

// msr: generate ranking instances, run algorithms, check properties and
// time the streaming algorithms.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msr/bench.h"
#include "msr/error.h"
#include "msr/scenarios.h"
#include "msr/serialization.h"
#include "msr/stream.h"
#include "msr_app/app.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw msr::Error(msr::ErrorCode::kConfig, "cannot write " + out_path);
  }
  out << text;
}

msr::Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw msr::Error(msr::ErrorCode::kConfig, "cannot open " + path);
  try {
    return msr::Json::parse(in);
  } catch (const msr::Json::exception& e) {
    throw msr::Error(msr::ErrorCode::kParse, path + ": " + e.what());
  }
}

struct GenArgs {
  std::string kind;
  std::string config_path;
  std::string triples, edges, clicklog, embeddings;
  std::string mode;
  std::string out;
  msr::ScenarioConfig config;
};

int CmdGen(GenArgs& a) {
  msr::ScenarioConfig c = a.config;
  if (!a.config_path.empty()) {
    msr::Json j = msr::ScenarioConfigToJson(c);
    j.update(ReadJsonFile(a.config_path));
    c = msr::ScenarioConfigFromJson(j);
  }
  c.kind = msr::ParseScenarioKind(a.kind);
  if (!a.mode.empty()) c.mode = msr::ParseMode(a.mode);
  for (const std::string* path : {&a.triples, &a.edges, &a.clicklog, &a.embeddings}) {
    if (!path->empty()) c.source_path = *path;
  }
  if (c.kind == msr::ScenarioKind::kOnlineSelection && c.values.empty()) {
    throw msr::Error(msr::ErrorCode::kConfig,
                     "--kind online_selection requires --values");
  }
  const msr::Instance instance = msr::Generate(c);
  Emit(msr::InstanceToJson(instance).dump(1) + "\n", a.out);
  return kExitOk;
}

struct RunArgs {
  std::string instance_path;
  std::vector<std::string> algos;
  std::uint64_t seed = 0;
  std::optional<int> k_loop;
  bool force = false;
  double threshold = 2.0;
  std::string placement = "every_rank";
  std::string stream_path;
  std::string sweep;
  int repeats = 1;
  std::string replay_path;
  std::string out;
};

int CmdRun(RunArgs& a) {
  if (!a.replay_path.empty()) {
    const msr::Json file = ReadJsonFile(a.replay_path);
    const msr::Json& echo =
        file.contains("config_echo") ? file.at("config_echo") : file;
    const msr::app::RunResult result = msr::app::Replay(echo);
    const msr::Instance instance = msr::InstanceFromJson(echo.at("instance"));
    Emit(msr::app::RunResultToJson(result, instance.dummy()).dump(2) + "\n",
         a.out);
    if (file.contains("objective")) {
      const double recorded = file.at("objective").get<double>();
      if (recorded != result.objective) {
        std::cerr << "replay: objective " << result.objective
                  << " differs from recorded " << recorded << "\n";
        return kExitPropertyFailure;
      }
      std::cerr << "replay: objective reproduced exactly\n";
    }
    return kExitOk;
  }
  if (a.instance_path.empty()) {
    throw msr::Error(msr::ErrorCode::kConfig,
                     "run needs an instance file (or --replay)");
  }
  if (a.algos.empty()) {
    throw msr::Error(msr::ErrorCode::kConfig, "run needs --algo");
  }
  msr::Instance instance = msr::LoadInstance(a.instance_path);

  std::vector<msr::app::RunConfig> runs;
  for (const std::string& name : a.algos) {
    msr::app::RunConfig run;
    run.algorithm = msr::app::ParseAlgorithm(name);
    run.seed = a.seed;
    run.k_loop = a.k_loop;
    run.force = a.force;
    run.threshold = a.threshold;
    run.placement = a.placement == "best_gain"       ? msr::Placement::kBestGain
                    : a.placement == "first_success" ? msr::Placement::kFirstSuccess
                                                     : msr::Placement::kEveryRank;
    runs.push_back(run);
  }

  if (!a.stream_path.empty()) {
    std::ifstream in(a.stream_path);
    if (!in) {
      throw msr::Error(msr::ErrorCode::kConfig, "cannot open " + a.stream_path);
    }
    std::vector<msr::Demand> demands;
    std::vector<msr::ItemId> items;
    for (const auto& event : msr::ParseStream(in, instance.n_items)) {
      if (const auto* batch = std::get_if<msr::FunctionBatch>(&event)) {
        demands.insert(demands.end(), batch->demands.begin(),
                       batch->demands.end());
      } else {
        items.push_back(std::get<msr::ItemArrival>(event).item);
      }
    }
    if (!demands.empty()) {
      instance.demands = std::move(demands);
      instance.Validate();
    }
    for (auto& run : runs) run.item_stream = items;
  }

  if (!a.sweep.empty()) {
    const auto spec = msr::app::ParseSweep(a.sweep);
    std::ostringstream csv;
    msr::app::WriteSweepCsv(
        csv, msr::app::RunSweep(instance, runs, spec, a.repeats, a.seed));
    Emit(csv.str(), a.out);
    return kExitOk;
  }
  if (runs.size() != 1) {
    throw msr::Error(msr::ErrorCode::kConfig,
                     "several algorithms are only allowed with --sweep");
  }
  const msr::app::RunResult result = msr::app::Run(instance, runs.front());
  Emit(msr::app::RunResultToJson(result, instance.dummy()).dump(2) + "\n",
       a.out);
  return kExitOk;
}

struct CheckArgs {
  std::string suite;
  msr::app::SuiteOptions options;
  std::string witness_out;
};

int CmdCheck(CheckArgs& a) {
  const auto outcome =
      msr::app::RunSuite(msr::app::ParseSuite(a.suite), a.options);
  for (const auto& line : outcome.lines) std::cout << line << "\n";
  std::cout << (outcome.ok ? "PASS" : "FAIL") << "\n";
  if (!outcome.ok) {
    const std::string text = outcome.witnesses.dump(1) + "\n";
    if (a.witness_out.empty()) {
      std::cerr << text;
    } else {
      Emit(text, a.witness_out);
    }
    return kExitPropertyFailure;
  }
  return kExitOk;
}

struct BenchArgs {
  std::string axis = "demands";
  msr::BenchOptions options;
  std::string out;
};

int CmdBench(BenchArgs& a) {
  a.options.axis = msr::ParseBenchAxis(a.axis);
  std::ostringstream csv;
  csv << "axis,size,algorithm,wall_time_ms,objective\n";
  for (const auto& row : msr::RunBench(a.options)) {
    csv << a.axis << ',' << row.size << ',' << row.algorithm << ','
        << row.wall_time_ms << ',' << row.objective << '\n';
  }
  Emit(csv.str(), a.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular ranking: instances, algorithms and checks", "msr"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance as JSON");
  gen_cmd->add_option("--kind", gen.kind,
                      "music | viral | webrank | divrec | online_selection | "
                      "synthetic")
      ->required();
  gen_cmd->add_option("--config", gen.config_path,
                      "Scenario config JSON; flags override it");
  gen_cmd->add_option("--max-budget", gen.config.max_budget);
  gen_cmd->add_option("--n-demands", gen.config.n_demands);
  gen_cmd->add_option("--horizon", gen.config.horizon);
  gen_cmd->add_option("--seed", gen.config.seed);
  gen_cmd->add_option("--triples", gen.triples, "music: user,song,count rows");
  gen_cmd->add_option("--edges", gen.edges, "viral: edge list");
  gen_cmd->add_option("--clicklog", gen.clicklog,
                      "webrank: user,query,page rows");
  gen_cmd->add_option("--embeddings", gen.embeddings,
                      "divrec: `word v1 v2 ...` rows");
  gen_cmd->add_option("--query-filter", gen.config.query_filter);
  gen_cmd->add_option("--keyword", gen.config.keyword);
  gen_cmd->add_option("--n-candidates", gen.config.n_candidates);
  gen_cmd->add_option("--n-bases", gen.config.n_bases);
  gen_cmd->add_option("--list-length", gen.config.list_length);
  gen_cmd->add_option("--group-probability", gen.config.group_probability);
  gen_cmd->add_flag("--open-neighborhood", gen.config.open_neighborhood);
  gen_cmd->add_option("--n-items", gen.config.n_items);
  gen_cmd->add_option("--subset-size", gen.config.subset_size);
  gen_cmd->add_option("--mode", gen.mode, "synthetic: MSR | MSRF | MSRA | MSRI");
  gen_cmd->add_option("--values", gen.config.values,
                      "online_selection: comma-separated positive values")
      ->delimiter(',');
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run an algorithm on an instance");
  run_cmd->add_option("instance", run.instance_path, "Instance JSON");
  run_cmd->add_option("--algo", run.algos,
                      "greedy | greedy_msrf | exchange | random | topk | "
                      "looptopk | brute (comma-separated with --sweep)")
      ->delimiter(',');
  run_cmd->add_option("--seed", run.seed);
  run_cmd->add_option("--k-loop", run.k_loop, "looptopk cycle length");
  run_cmd->add_flag("--force", run.force,
                    "Run greedy_msrf even when items cannot be reused");
  run_cmd->add_option("--threshold", run.threshold,
                      "exchange replacement factor");
  run_cmd->add_option("--placement", run.placement)
      ->check(CLI::IsMember({"every_rank", "first_success", "best_gain"}));
  run_cmd->add_option("--stream", run.stream_path,
                      "Event file: `F <step> <demand-json>` / `I <item>`");
  run_cmd->add_option("--sweep", run.sweep,
                      "e.g. \"max_budget=1..50 step 5\"; emits CSV");
  run_cmd->add_option("--repeats", run.repeats);
  run_cmd->add_option("--replay", run.replay_path,
                      "Re-run from a RunResult (or its config_echo)");
  run_cmd->add_option("-o,--out", run.out, "Output file (default stdout)");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run a property suite");
  check_cmd->add_option("--suite", check.suite, "functions | matroids | ratios")
      ->required();
  check_cmd->add_option("--seed", check.options.seed);
  check_cmd->add_option("--count", check.options.count);
  check_cmd->add_option("--threshold", check.options.threshold,
                        "exchange replacement factor in the ratios suite");
  check_cmd->add_option("--witness-out", check.witness_out,
                        "Write failing witnesses here instead of stderr");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time greedy_msrf and exchange");
  bench_cmd->add_option("--axis", bench.axis, "items | demands")
      ->check(CLI::IsMember({"items", "demands"}));
  bench_cmd->add_option("--points", bench.options.points)->delimiter(',');
  bench_cmd->add_option("--seed", bench.options.seed);
  bench_cmd->add_option("--repeats", bench.options.repeats);
  bench_cmd->add_option("--items", bench.options.fixed_items,
                        "Item count on the demands axis");
  bench_cmd->add_option("--demands", bench.options.fixed_demands,
                        "Demand count on the items axis");
  bench_cmd->add_option("-o,--out", bench.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return CmdGen(gen);
    if (*run_cmd) return CmdRun(run);
    if (*check_cmd) return CmdCheck(check);
    if (*bench_cmd) return CmdBench(bench);
  } catch (const msr::Error& e) {
    std::cerr << "msr: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
