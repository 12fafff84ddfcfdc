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

#ifndef MSR_SCENARIOS_H_
#define MSR_SCENARIOS_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msr/instance.h"
#include "msr/serialization.h"

namespace msr {

enum class ScenarioKind {
  kMusic,
  kViral,
  kWebrank,
  kDivrec,
  kOnlineSelection,
  kSynthetic,
};

std::string_view ScenarioKindName(ScenarioKind kind);
ScenarioKind ParseScenarioKind(std::string_view name);

// Everything a generator reads. Fields a kind does not use are ignored.
// A fixed config (including seed and the input file) fixes the instance.
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::kSynthetic;
  int max_budget = 10;
  // 0 keeps every user / intent found in the input.
  int n_demands = 100;
  int horizon = 100;
  std::uint64_t seed = 0;

  // Triples, edge list, click log or embeddings. Empty: the music, viral,
  // webrank and divrec generators synthesize a small input from the seed.
  std::string source_path;

  std::string query_filter = "movie";  // webrank
  std::string keyword;                 // divrec; empty means the first word
  int n_candidates = 10000;            // divrec
  int n_bases = 100;                   // divrec
  int list_length = 40;                // divrec
  double group_probability = 0.01;     // viral
  bool open_neighborhood = false;      // viral

  // Synthetic sizes, also used by the built-in music/viral/webrank data.
  int n_items = 1000;
  int subset_size = 100;
  Mode mode = Mode::kMsrf;  // synthetic only: kMsrf, kMsr or kMsra

  std::vector<double> values;  // online_selection
};

Json ScenarioConfigToJson(const ScenarioConfig& config);
// Missing fields keep their defaults. Throws kConfig on bad values.
ScenarioConfig ScenarioConfigFromJson(const Json& j);
// Throws kConfig on out-of-range fields.
void ValidateScenarioConfig(const ScenarioConfig& config);

// Dispatches on config.kind. The result carries the config under
// `instance.generator`.
Instance Generate(const ScenarioConfig& config);

// Music: rows `user, song, count` (comma or tab separated). One coverage
// demand per user over the songs played more than once; reuse allowed.
Instance GenMusic(std::istream& triples, const ScenarioConfig& config);

struct MusicTriple {
  std::string user;
  std::string song;
  int count = 0;
};
// Users with popularity-skewed listening habits over `n_songs` songs named
// song0..song<n-1>.
std::vector<MusicTriple> SyntheticMusicTriples(int n_users, int n_songs,
                                               std::uint64_t seed);

// Viral: whitespace edge list. Every node is an item; each demand covers
// the neighborhood of a random node group.
Instance GenViral(const std::filesystem::path& edges,
                  const ScenarioConfig& config);

// Webrank: rows `user, query, clicked_page`; only rows whose query contains
// config.query_filter count. One coverage demand per user, slots 1..patience.
Instance GenWebrank(std::istream& click_log, const ScenarioConfig& config);

// Divrec: rows `word v1 v2 ...`. Scores are cosine similarity minus 0.5,
// clamped at 0.
Instance GenDivrec(std::istream& embeddings, const ScenarioConfig& config);

// One modular demand per value. Item 0 is worth values[t-1] to the demand
// of step t, which can only be served at step t; items 1..n-1 are worthless.
Instance GenOnlineSelection(std::span<const double> values);

Instance GenSynthetic(const ScenarioConfig& config);

// Tiny random instances for exhaustive cross-checks.
struct SmallInstanceOptions {
  enum class Base { kNone, kUniform, kPartition };

  Mode mode = Mode::kMsr;
  int max_items = 5;
  int max_demands = 4;
  int max_budget = 3;
  int max_horizon = 4;  // kMsrf arrivals
  int max_slot = 5;     // kMsra / kMsri slot ids
  bool allow_reuse = false;
  Base base = Base::kNone;
  // Coverage only when false; otherwise also modular, neighborhood,
  // divrel and weighted sums, with random demand weights.
  bool mixed_families = true;
};

Instance GenRandomSmall(const SmallInstanceOptions& options,
                        std::uint64_t seed, std::uint64_t index);

}  // namespace msr

#endif  // MSR_SCENARIOS_H_
