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

#ifndef MSR_APP_APP_H_
#define MSR_APP_APP_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "msr/exchange.h"
#include "msr/instance.h"
#include "msr/serialization.h"
#include "msr/slot_assignment.h"

namespace msr::app {

enum class Algorithm {
  kGreedy,
  kGreedyMsrf,
  kExchange,
  kRandom,
  kTopK,
  kLoopTopK,
  kBrute,
};

std::string_view AlgorithmName(Algorithm algorithm);
Algorithm ParseAlgorithm(std::string_view name);
const std::vector<Algorithm>& AllAlgorithms();

// Everything besides the instance that determines a run.
struct RunConfig {
  Algorithm algorithm = Algorithm::kGreedy;
  std::uint64_t seed = 0;
  std::optional<int> k_loop;
  bool force = false;  // greedy_msrf without reuse
  double threshold = 2.0;
  Placement placement = Placement::kEveryRank;
  // Arrival order for exchange; empty means ids in ascending order.
  std::vector<ItemId> item_stream;
};

struct RunResult {
  std::string algorithm;
  double objective = 0.0;
  SlotAssignment sequence;
  std::vector<double> per_demand;
  double wall_time_ms = 0.0;
  std::uint64_t seed = 0;
  // The run config plus the full instance; enough to replay the run.
  Json config_echo;
};

// Throws kConfig when the algorithm does not apply to the instance's mode.
void CheckCompatible(Algorithm algorithm, const Instance& instance);

RunResult Run(const Instance& instance, const RunConfig& config);
// Re-runs from a config_echo.
RunResult Replay(const Json& config_echo);

Json RunConfigToJson(const RunConfig& config);
RunConfig RunConfigFromJson(const Json& j);
Json RunResultToJson(const RunResult& result, ItemId dummy);

// ---------------------------------------------------------------------------
// Sweeps

struct SweepSpec {
  std::string param;
  std::vector<double> values;
};

// "name=lo..hi step s", "name=lo..hi:s", "name=lo..hi" (step 1) or
// "name=a,b,c". Throws kConfig.
SweepSpec ParseSweep(std::string_view text);

// Parameters that change the run rather than the instance.
bool IsRunParameter(std::string_view param);

struct SweepRow {
  std::string param;
  double value = 0.0;
  int repeat = 0;
  std::uint64_t seed = 0;
  std::string algorithm;  // looptopk carries its loop length: looptopk_k5
  double objective = 0.0;
  double wall_time_ms = 0.0;
};

// For every value and repeat, regenerates the instance from its generator
// block (scenario seed derived from `seed` and the repeat) and runs every
// algorithm. looptopk without k_loop expands to the default loop lengths.
std::vector<SweepRow> RunSweep(const Instance& instance,
                               const std::vector<RunConfig>& runs,
                               const SweepSpec& sweep, int repeats,
                               std::uint64_t seed);

inline const std::vector<int> kDefaultLoopLengths = {1, 5, 10, 50};

void WriteSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows);

// ---------------------------------------------------------------------------
// Property suites

enum class Suite { kFunctions, kMatroids, kRatios };

std::string_view SuiteName(Suite suite);
Suite ParseSuite(std::string_view name);

struct SuiteOptions {
  std::uint64_t seed = 0;
  int count = 100;
  // Replacement threshold used by exchange in the ratios suite.
  double threshold = 2.0;
};

struct SuiteOutcome {
  bool ok = true;
  std::vector<std::string> lines;  // human-readable summary
  Json witnesses = Json::array();  // failing instances / sets
};

SuiteOutcome RunSuite(Suite suite, const SuiteOptions& options);

}  // namespace msr::app

#endif  // MSR_APP_APP_H_
