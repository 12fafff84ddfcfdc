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

#include "msr_app/app.h"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "msr/baselines.h"
#include "msr/brute_force.h"
#include "msr/error.h"
#include "msr/functions.h"
#include "msr/greedy.h"
#include "msr/objective.h"
#include "msr/property_checks.h"
#include "msr/random.h"
#include "msr/rank_extended_matroid.h"
#include "msr/ratio_harness.h"
#include "msr/scenarios.h"

namespace msr::app {
namespace {

[[noreturn]] void ConfigError(const std::string& message) {
  throw Error(ErrorCode::kConfig, message);
}

std::string_view PlacementName(Placement p) {
  switch (p) {
    case Placement::kEveryRank: return "every_rank";
    case Placement::kFirstSuccess: return "first_success";
    case Placement::kBestGain: return "best_gain";
  }
  return "unknown";
}

Placement ParsePlacement(std::string_view name) {
  if (name == "every_rank") return Placement::kEveryRank;
  if (name == "first_success") return Placement::kFirstSuccess;
  if (name == "best_gain") return Placement::kBestGain;
  ConfigError("unknown placement '" + std::string(name) + "'");
}

std::string RunLabel(const RunConfig& run) {
  std::string label(AlgorithmName(run.algorithm));
  if (run.algorithm == Algorithm::kLoopTopK && run.k_loop) {
    label += "_k" + std::to_string(*run.k_loop);
  }
  return label;
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kGreedyMsrf: return "greedy_msrf";
    case Algorithm::kExchange: return "exchange";
    case Algorithm::kRandom: return "random";
    case Algorithm::kTopK: return "topk";
    case Algorithm::kLoopTopK: return "looptopk";
    case Algorithm::kBrute: return "brute";
  }
  return "unknown";
}

const std::vector<Algorithm>& AllAlgorithms() {
  static const std::vector<Algorithm> all = {
      Algorithm::kGreedy, Algorithm::kGreedyMsrf, Algorithm::kExchange,
      Algorithm::kRandom, Algorithm::kTopK,       Algorithm::kLoopTopK,
      Algorithm::kBrute};
  return all;
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : AllAlgorithms()) {
    if (AlgorithmName(a) == name) return a;
  }
  ConfigError("unknown algorithm '" + std::string(name) +
              "' (expected greedy, greedy_msrf, exchange, random, topk, "
              "looptopk or brute)");
}

void CheckCompatible(Algorithm algorithm, const Instance& instance) {
  const std::string mode(ModeName(instance.mode));
  switch (algorithm) {
    case Algorithm::kGreedy:
      if (instance.mode == Mode::kMsrf) {
        ConfigError("greedy needs every demand up front; this " + mode +
                    " instance reveals demands online (use greedy_msrf)");
      }
      return;
    case Algorithm::kGreedyMsrf:
      if (instance.mode != Mode::kMsrf) {
        ConfigError("greedy_msrf runs on function-arriving (MSRF) instances, "
                    "not " + mode);
      }
      return;
    case Algorithm::kExchange:
      if (instance.mode == Mode::kMsrf) {
        ConfigError("exchange runs on item-arriving or offline instances, "
                    "not MSRF (use greedy_msrf)");
      }
      return;
    default:
      return;
  }
}

Json RunConfigToJson(const RunConfig& c) {
  return {{"algorithm", std::string(AlgorithmName(c.algorithm))},
          {"seed", c.seed},
          {"k_loop", c.k_loop ? Json(*c.k_loop) : Json(nullptr)},
          {"force", c.force},
          {"threshold", c.threshold},
          {"placement", std::string(PlacementName(c.placement))},
          {"item_stream", c.item_stream}};
}

RunConfig RunConfigFromJson(const Json& j) {
  RunConfig c;
  try {
    c.algorithm = ParseAlgorithm(j.at("algorithm").get<std::string>());
    c.seed = j.value("seed", c.seed);
    if (j.contains("k_loop") && !j.at("k_loop").is_null()) {
      c.k_loop = j.at("k_loop").get<int>();
    }
    c.force = j.value("force", c.force);
    c.threshold = j.value("threshold", c.threshold);
    c.placement = ParsePlacement(j.value("placement", std::string("every_rank")));
    c.item_stream = j.value("item_stream", c.item_stream);
  } catch (const Json::exception& e) {
    ConfigError(std::string("run config: ") + e.what());
  }
  return c;
}

RunResult Run(const Instance& instance, const RunConfig& config) {
  CheckCompatible(config.algorithm, instance);
  SlotAssignment seq;
  const auto start = std::chrono::steady_clock::now();
  switch (config.algorithm) {
    case Algorithm::kGreedy:
      seq = GreedyOffline(instance);
      break;
    case Algorithm::kGreedyMsrf:
      seq = GreedyMsrf(instance, GreedyMsrfOptions{config.force});
      break;
    case Algorithm::kExchange: {
      ExchangeOptions options;
      options.threshold = config.threshold;
      options.placement = config.placement;
      seq = ExchangeMsri(instance, config.item_stream, options);
      break;
    }
    case Algorithm::kRandom:
      seq = RunBaseline(BaselinePolicy::kRandom, instance, config.seed);
      break;
    case Algorithm::kTopK:
      seq = RunBaseline(BaselinePolicy::kTopK, instance, config.seed);
      break;
    case Algorithm::kLoopTopK:
      seq = RunBaseline(BaselinePolicy::kLoopTopK, instance, config.seed,
                        config.k_loop);
      break;
    case Algorithm::kBrute:
      seq = BruteForce(instance).opt_sequence;
      break;
  }
  RunResult result;
  result.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  result.algorithm = RunLabel(config);
  result.per_demand = PerDemandValues(instance, seq);
  for (double v : result.per_demand) result.objective += v;
  result.sequence = std::move(seq);
  result.seed = config.seed;
  result.config_echo = RunConfigToJson(config);
  result.config_echo["instance"] = InstanceToJson(instance);
  return result;
}

RunResult Replay(const Json& config_echo) {
  if (!config_echo.is_object() || !config_echo.contains("instance")) {
    ConfigError("config_echo lacks an instance");
  }
  return Run(InstanceFromJson(config_echo.at("instance")),
             RunConfigFromJson(config_echo));
}

Json RunResultToJson(const RunResult& r, ItemId dummy) {
  return {{"algorithm", r.algorithm},
          {"objective", r.objective},
          {"sequence", SequenceToJson(r.sequence, dummy)},
          {"per_demand", r.per_demand},
          {"wall_time_ms", r.wall_time_ms},
          {"seed", r.seed},
          {"config_echo", r.config_echo}};
}

// ---------------------------------------------------------------------------

SweepSpec ParseSweep(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    ConfigError("sweep must look like name=lo..hi[:step] or name=a,b,c");
  }
  SweepSpec spec;
  spec.param = std::string(text.substr(0, eq));
  std::string rest(text.substr(eq + 1));
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < s.size() && s[used] == ' ') ++used;
    if (used == 0 || used != s.size()) ConfigError("bad sweep number '" + s + "'");
    return x;
  };
  const auto dots = rest.find("..");
  if (dots == std::string::npos) {
    std::stringstream list(rest);
    std::string item;
    while (std::getline(list, item, ',')) spec.values.push_back(number(item));
  } else {
    const double lo = number(rest.substr(0, dots));
    std::string tail = rest.substr(dots + 2);
    double step = 1.0;
    auto split = tail.find(" step ");
    std::size_t skip = 6;
    if (split == std::string::npos) {
      split = tail.find(':');
      skip = 1;
    }
    if (split != std::string::npos) {
      step = number(tail.substr(split + skip));
      tail = tail.substr(0, split);
    }
    const double hi = number(tail);
    if (!(step > 0.0)) ConfigError("sweep step must be positive");
    for (int i = 0; lo + i * step <= hi + 1e-9; ++i) {
      spec.values.push_back(lo + i * step);
    }
  }
  if (spec.values.empty()) ConfigError("sweep has no values");
  return spec;
}

bool IsRunParameter(std::string_view param) {
  return param == "k_loop" || param == "threshold";
}

std::vector<SweepRow> RunSweep(const Instance& instance,
                               const std::vector<RunConfig>& runs,
                               const SweepSpec& sweep, int repeats,
                               std::uint64_t seed) {
  if (repeats < 1) ConfigError("repeats must be at least 1");
  const bool run_param = IsRunParameter(sweep.param);
  const bool has_generator =
      instance.generator.is_object() && instance.generator.contains("kind") &&
      instance.generator.at("kind") != "random_small";
  if (!run_param && !has_generator) {
    ConfigError("sweeping '" + sweep.param +
                "' needs an instance produced by `gen` (it has no generator "
                "block)");
  }
  if (!run_param && !instance.generator.contains(sweep.param)) {
    ConfigError("unknown sweep parameter '" + sweep.param + "'");
  }

  std::vector<RunConfig> expanded;
  for (const RunConfig& run : runs) {
    if (run.algorithm == Algorithm::kLoopTopK && !run.k_loop &&
        sweep.param != "k_loop") {
      for (int k : kDefaultLoopLengths) {
        RunConfig copy = run;
        copy.k_loop = k;
        expanded.push_back(copy);
      }
    } else {
      expanded.push_back(run);
    }
  }

  std::vector<SweepRow> rows;
  for (double value : sweep.values) {
    for (int r = 0; r < repeats; ++r) {
      const std::uint64_t rep_seed = DeriveSeed(seed, "repeat", r);
      Instance current = instance;
      if (has_generator) {
        Json gen = instance.generator;
        if (!run_param) {
          if (gen.at(sweep.param).is_number_integer() ||
              gen.at(sweep.param).is_number_unsigned()) {
            gen[sweep.param] = static_cast<long long>(std::llround(value));
          } else {
            gen[sweep.param] = value;
          }
        }
        gen["seed"] = rep_seed;
        current = Generate(ScenarioConfigFromJson(gen));
      }
      for (const RunConfig& base : expanded) {
        RunConfig run = base;
        if (sweep.param == "k_loop") run.k_loop = static_cast<int>(std::llround(value));
        if (sweep.param == "threshold") run.threshold = value;
        run.seed = DeriveSeed(rep_seed, "algo:" + std::string(AlgorithmName(run.algorithm)));
        const RunResult result = Run(current, run);
        rows.push_back({sweep.param, value, r, rep_seed, result.algorithm,
                        result.objective, result.wall_time_ms});
      }
    }
  }
  return rows;
}

void WriteSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "param,value,repeat,seed,algorithm,objective,wall_time_ms\n";
  for (const SweepRow& row : rows) {
    out << row.param << ',' << row.value << ',' << row.repeat << ','
        << row.seed << ',' << row.algorithm << ','
        << std::setprecision(17) << row.objective << ','
        << std::setprecision(6) << row.wall_time_ms << '\n';
  }
}

// ---------------------------------------------------------------------------

std::string_view SuiteName(Suite suite) {
  switch (suite) {
    case Suite::kFunctions: return "functions";
    case Suite::kMatroids: return "matroids";
    case Suite::kRatios: return "ratios";
  }
  return "unknown";
}

Suite ParseSuite(std::string_view name) {
  for (Suite s : {Suite::kFunctions, Suite::kMatroids, Suite::kRatios}) {
    if (SuiteName(s) == name) return s;
  }
  ConfigError("unknown suite '" + std::string(name) +
              "' (expected functions, matroids or ratios)");
}

namespace {

std::string Fixed(double x, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

SuiteOutcome FunctionsSuite(const SuiteOptions& o) {
  SuiteOutcome out;
  SmallInstanceOptions small;
  small.max_items = 8;
  SubmodularCheckOptions check;
  check.seed = o.seed;
  std::int64_t oracles = 0, checks = 0;
  auto record = [&](const SubmodularOracle& f, const SubmodularReport& r,
                    const std::string& where) {
    ++oracles;
    checks += r.checks;
    if (r.ok()) return;
    out.ok = false;
    for (const auto& v : r.violations) {
      out.witnesses.push_back({{"where", where},
                               {"family", std::string(f.family())},
                               {"violation", v.Describe()},
                               {"oracle", OracleToJson(f)}});
    }
  };
  for (int i = 0; i < o.count; ++i) {
    const Instance inst = GenRandomSmall(small, o.seed, static_cast<std::uint64_t>(i));
    for (const Demand& d : inst.demands) {
      record(*d.oracle, CheckSubmodular(*d.oracle, inst.n_items, check),
             "random instance " + std::to_string(i));
    }
  }
  // Larger generated oracles, sampled.
  ScenarioConfig divrec;
  divrec.kind = ScenarioKind::kDivrec;
  divrec.seed = o.seed;
  divrec.n_items = 60;
  divrec.n_bases = 10;
  const Instance dr = Generate(divrec);
  ScenarioConfig viral;
  viral.kind = ScenarioKind::kViral;
  viral.seed = o.seed;
  viral.n_items = 200;
  viral.n_demands = 5;
  viral.group_probability = 0.05;
  const Instance vi = Generate(viral);
  for (const Instance* inst : {&dr, &vi}) {
    for (const Demand& d : inst->demands) {
      record(*d.oracle, CheckSubmodular(*d.oracle, inst->n_items, check),
             "generated " + std::string(d.oracle->family()));
    }
  }
  out.lines.push_back("functions: " + std::to_string(oracles) +
                      " oracles, " + std::to_string(checks) + " checks, " +
                      std::to_string(out.witnesses.size()) + " violations");
  return out;
}

std::shared_ptr<const ItemMatroid> RandomBase(Rng& rng, int n) {
  auto partition = [&]() {
    std::vector<std::vector<ItemId>> groups(2);
    for (ItemId v = 0; v < n; ++v) {
      groups[static_cast<std::size_t>(UniformInt(rng, 0, 1))].push_back(v);
    }
    std::vector<int> caps = {static_cast<int>(UniformInt(rng, 0, 2)),
                             static_cast<int>(UniformInt(rng, 0, 2))};
    return std::make_shared<PartitionMatroid>(groups, caps, n);
  };
  switch (UniformInt(rng, 0, 3)) {
    case 0:
      return nullptr;
    case 1:
      return std::make_shared<UniformMatroid>(static_cast<int>(UniformInt(rng, 0, n)), n);
    case 2:
      return partition();
    default:
      return std::make_shared<MatroidIntersection>(
          std::vector<std::shared_ptr<const ItemMatroid>>{partition(), partition()});
  }
}

SuiteOutcome MatroidsSuite(const SuiteOptions& o) {
  SuiteOutcome out;
  Rng rng = MakeRng(o.seed, "suite:matroids");
  MatroidCheckOptions check;
  check.seed = o.seed;
  std::int64_t checked = 0, checks = 0;
  auto record = [&](const MatroidReport& r, const Json& what) {
    checks += r.checks;
    if (r.ok()) return;
    out.ok = false;
    for (const auto& v : r.violations) {
      out.witnesses.push_back({{"matroid", what}, {"violation", v.witness}});
    }
  };
  for (int i = 0; i < o.count; ++i) {
    const int n = static_cast<int>(UniformInt(rng, 1, 4));
    const int ranks = static_cast<int>(UniformInt(rng, 1, 4));
    const auto base = RandomBase(rng, n);
    const Json what = {{"n_items", n},
                       {"ranks", ranks},
                       {"base", base ? MatroidToJson(*base) : Json(nullptr)}};
    // An intersection of matroids is not a matroid in general, so only its
    // parts and the individual lifted components are checked.
    std::vector<ItemId> items(static_cast<std::size_t>(n));
    for (ItemId v = 0; v < n; ++v) items[static_cast<std::size_t>(v)] = v;
    if (base) {
      for (const auto& part : MatroidComponents(base)) {
        record(CheckMatroid<ItemId>(*part, items, check), what);
        ++checked;
      }
    }
    const RankExtendedMatroid lifted(base, n, ranks);
    const auto ground = lifted.GroundSet();
    for (const auto& component : lifted.components()) {
      record(CheckMatroid<ExtendedElement>(*component, ground, check), what);
      ++checked;
    }
  }
  out.lines.push_back("matroids: " + std::to_string(checked) +
                      " matroids, " + std::to_string(checks) + " checks, " +
                      std::to_string(out.witnesses.size()) + " violations");
  return out;
}

SuiteOutcome RatiosSuite(const SuiteOptions& o) {
  SuiteOutcome out;
  auto add = [&](const RatioReport& r) {
    out.lines.push_back("ratios: " + r.algorithm + " worst " +
                        Fixed(r.worst_ratio) + " (floor " + Fixed(r.floor) +
                        ") over " + std::to_string(r.count) + " instances, " +
                        std::to_string(r.failures.size()) + " breaches");
    for (const auto& f : r.failures) {
      out.ok = false;
      out.witnesses.push_back({{"algorithm", r.algorithm},
                               {"index", f.index},
                               {"alg", f.alg},
                               {"opt", f.opt},
                               {"instance", f.instance}});
    }
  };
  auto source = [&](SmallInstanceOptions opts) {
    return [opts, seed = o.seed](std::uint64_t i) {
      return GenRandomSmall(opts, seed, i);
    };
  };
  SmallInstanceOptions msrf;
  msrf.mode = Mode::kMsrf;
  msrf.allow_reuse = true;
  add(RunRatioHarness(
      "greedy_msrf", [](const Instance& x) { return GreedyMsrf(x); },
      source(msrf), o.count, 0.5));
  SmallInstanceOptions msr;
  add(RunRatioHarness(
      "greedy", [](const Instance& x) { return GreedyOffline(x); },
      source(msr), o.count, 0.5));
  ExchangeOptions exchange;
  exchange.threshold = o.threshold;
  auto run_exchange = [exchange](const Instance& x) {
    return ExchangeMsri(x, {}, exchange);
  };
  SmallInstanceOptions msra;
  msra.mode = Mode::kMsra;
  // Both families lift to two matroids: the 1/(4*2) floor.
  add(RunRatioHarness("exchange", run_exchange, source(msra), o.count, 1.0 / 8));
  msra.base = SmallInstanceOptions::Base::kPartition;
  add(RunRatioHarness("exchange+partition", run_exchange, source(msra), o.count,
                      1.0 / 8));
  return out;
}

}  // namespace

SuiteOutcome RunSuite(Suite suite, const SuiteOptions& options) {
  if (options.count < 0) ConfigError("count must be non-negative");
  switch (suite) {
    case Suite::kFunctions: return FunctionsSuite(options);
    case Suite::kMatroids: return MatroidsSuite(options);
    case Suite::kRatios: return RatiosSuite(options);
  }
  ConfigError("unhandled suite");
}

}  // namespace msr::app
