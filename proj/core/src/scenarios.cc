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

#include "msr/scenarios.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "msr/error.h"
#include "msr/functions.h"
#include "msr/logging.h"
#include "msr/random.h"

namespace msr {
namespace {

[[noreturn]] void ConfigError(const std::string& message) {
  throw Error(ErrorCode::kConfig, message);
}

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

bool SkipLine(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Splits on commas, or on tabs when the line has no comma.
std::vector<std::string> SplitRow(const std::string& line) {
  const char sep = line.find(',') != std::string::npos ? ',' : '\t';
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    fields.push_back(Trim(std::string_view(line).substr(
        start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return fields;
}

[[noreturn]] void RowError(int line_no, const std::string& message) {
  throw Error(ErrorCode::kParse,
              "line " + std::to_string(line_no) + ": " + message);
}

std::vector<Rank> Prefix(int k) {
  std::vector<Rank> out(static_cast<std::size_t>(k));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

// `count` distinct values from [0, n), in draw order.
std::vector<ItemId> SampleDistinct(Rng& rng, int n, int count) {
  count = std::min(count, n);
  std::vector<ItemId> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count * 4 >= n) {
    std::vector<ItemId> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < count; ++i) {
      const auto j = UniformInt(rng, i, n - 1);
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }
  std::set<ItemId> seen;
  while (static_cast<int>(out.size()) < count) {
    const auto v = static_cast<ItemId>(UniformInt(rng, 0, n - 1));
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

// Random (budget, arrival) pair: an absolute deadline for kMsrf.
void DrawTiming(Rng& rng, const ScenarioConfig& config, Demand* d) {
  const int patience = static_cast<int>(UniformInt(rng, 1, config.max_budget));
  const int arrival = static_cast<int>(UniformInt(rng, 1, config.horizon));
  d->arrival = arrival;
  d->budget = arrival + patience - 1;
}

template <typename Key>
ItemId Intern(std::unordered_map<Key, ItemId>& ids, std::vector<Key>& order,
              const Key& key) {
  auto [it, inserted] = ids.emplace(key, static_cast<ItemId>(order.size()));
  if (inserted) order.push_back(key);
  return it->second;
}

Instance MusicFromTriples(const std::vector<MusicTriple>& rows,
                          const ScenarioConfig& config,
                          const std::vector<std::string>& preset_songs) {
  std::unordered_map<std::string, ItemId> song_ids;
  std::vector<std::string> songs;
  for (const auto& s : preset_songs) Intern(song_ids, songs, s);
  std::unordered_map<std::string, ItemId> user_ids;
  std::vector<std::string> users;
  std::vector<std::map<ItemId, long long>> plays;
  for (const MusicTriple& row : rows) {
    const ItemId song = Intern(song_ids, songs, row.song);
    const ItemId user = Intern(user_ids, users, row.user);
    if (static_cast<std::size_t>(user) >= plays.size()) plays.emplace_back();
    plays[user][song] += row.count;
  }

  Instance instance;
  instance.n_items = static_cast<int>(songs.size());
  instance.mode = Mode::kMsrf;
  instance.allow_reuse = true;
  Rng rng = MakeRng(config.seed, "music");
  for (std::size_t u = 0; u < users.size(); ++u) {
    if (config.n_demands > 0 &&
        static_cast<int>(instance.demands.size()) >= config.n_demands) {
      break;
    }
    std::vector<ItemId> liked;
    for (const auto& [song, count] : plays[u]) {
      if (count > 1) liked.push_back(song);
    }
    if (liked.empty()) {
      log::Warning("music: user '" + users[u] +
                   "' likes no song; demand dropped");
      continue;
    }
    Demand d;
    d.oracle = std::make_shared<CoverageFunction>(instance.n_items,
                                                  std::move(liked));
    DrawTiming(rng, config, &d);
    instance.demands.push_back(std::move(d));
  }
  return instance;
}

std::vector<MusicTriple> ReadTriples(std::istream& in) {
  std::vector<MusicTriple> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (SkipLine(line)) continue;
    const auto fields = SplitRow(line);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      RowError(line_no, "expected `user, song, count`");
    }
    int count = 0;
    const auto& c = fields[2];
    const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), count);
    if (ec != std::errc() || ptr != c.data() + c.size() || count < 0) {
      RowError(line_no, "play count '" + c + "' is not a non-negative integer");
    }
    rows.push_back({fields[0], fields[1], count});
  }
  return rows;
}

std::shared_ptr<const Graph> SyntheticGraph(int n, std::uint64_t seed) {
  Rng rng = MakeRng(seed, "viral:graph");
  std::vector<std::pair<ItemId, ItemId>> edges;
  for (ItemId u = 0; u < n && n > 1; ++u) {
    for (int j = 0; j < 2; ++j) {
      edges.emplace_back(u, static_cast<ItemId>(UniformInt(rng, 0, n - 1)));
    }
  }
  return std::make_shared<Graph>(Graph::FromEdges(n, edges));
}

struct Click {
  std::string user;
  std::string query;
  std::string page;
};

std::vector<Click> ReadClicks(std::istream& in) {
  std::vector<Click> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (SkipLine(line)) continue;
    auto fields = SplitRow(line);
    if (fields.size() != 3 || fields[0].empty() || fields[2].empty()) {
      RowError(line_no, "expected `user, query, clicked_page`");
    }
    rows.push_back({fields[0], fields[1], fields[2]});
  }
  return rows;
}

std::vector<Click> SyntheticClicks(const ScenarioConfig& config) {
  Rng rng = MakeRng(config.seed, "webrank:log");
  const int users = config.n_demands > 0 ? config.n_demands : 100;
  const int pages = config.n_items;
  std::vector<Click> rows;
  for (int u = 0; u < users; ++u) {
    const bool on_topic = UniformReal(rng) < 0.8;
    const std::string query = on_topic ? "movie times" : "weather";
    const int clicks = static_cast<int>(UniformInt(rng, 1, 5));
    for (int c = 0; c < clicks; ++c) {
      const double r = UniformReal(rng);
      const int page = static_cast<int>(pages * r * r);
      rows.push_back({"user" + std::to_string(u), query,
                      "page" + std::to_string(page)});
    }
  }
  return rows;
}

struct Embeddings {
  std::vector<std::string> words;
  std::vector<std::vector<double>> vectors;  // unit length (or zero)
};

Embeddings ReadEmbeddings(std::istream& in) {
  Embeddings e;
  std::string line;
  int line_no = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (SkipLine(line)) continue;
    std::istringstream fields(line);
    std::string word;
    fields >> word;
    std::vector<double> v;
    std::string token;
    while (fields >> token) {
      double x = 0.0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), x);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        RowError(line_no, "'" + token + "' is not a number");
      }
      v.push_back(x);
    }
    if (v.empty()) RowError(line_no, "word without a vector");
    if (dim == 0) dim = v.size();
    if (v.size() != dim) {
      RowError(line_no, "vector has " + std::to_string(v.size()) +
                            " entries, expected " + std::to_string(dim));
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0.0) {
      for (double& x : v) x /= norm;
    }
    e.words.push_back(std::move(word));
    e.vectors.push_back(std::move(v));
  }
  return e;
}

std::string SyntheticEmbeddingText(const ScenarioConfig& config) {
  Rng rng = MakeRng(config.seed, "divrec:vectors");
  constexpr int kDim = 16;
  std::ostringstream out;
  out.precision(17);
  for (int w = 0; w < config.n_items; ++w) {
    out << "w" << w;
    for (int d = 0; d < kDim; ++d) out << ' ' << UniformReal(rng) - 0.3;
    out << '\n';
  }
  return out.str();
}

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Instance WithGenerator(Instance instance, const ScenarioConfig& config) {
  instance.generator = ScenarioConfigToJson(config);
  instance.Validate();
  return instance;
}

}  // namespace

std::string_view ScenarioKindName(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kMusic: return "music";
    case ScenarioKind::kViral: return "viral";
    case ScenarioKind::kWebrank: return "webrank";
    case ScenarioKind::kDivrec: return "divrec";
    case ScenarioKind::kOnlineSelection: return "online_selection";
    case ScenarioKind::kSynthetic: return "synthetic";
  }
  return "unknown";
}

ScenarioKind ParseScenarioKind(std::string_view name) {
  for (ScenarioKind k :
       {ScenarioKind::kMusic, ScenarioKind::kViral, ScenarioKind::kWebrank,
        ScenarioKind::kDivrec, ScenarioKind::kOnlineSelection,
        ScenarioKind::kSynthetic}) {
    if (ScenarioKindName(k) == name) return k;
  }
  ConfigError("unknown scenario kind '" + std::string(name) + "'");
}

Json ScenarioConfigToJson(const ScenarioConfig& c) {
  return {{"kind", std::string(ScenarioKindName(c.kind))},
          {"max_budget", c.max_budget},
          {"n_demands", c.n_demands},
          {"horizon", c.horizon},
          {"seed", c.seed},
          {"source_path", c.source_path},
          {"query_filter", c.query_filter},
          {"keyword", c.keyword},
          {"n_candidates", c.n_candidates},
          {"n_bases", c.n_bases},
          {"list_length", c.list_length},
          {"group_probability", c.group_probability},
          {"open_neighborhood", c.open_neighborhood},
          {"n_items", c.n_items},
          {"subset_size", c.subset_size},
          {"mode", std::string(ModeName(c.mode))},
          {"values", c.values}};
}

ScenarioConfig ScenarioConfigFromJson(const Json& j) {
  if (!j.is_object()) ConfigError("scenario config must be a JSON object");
  ScenarioConfig c;
  try {
    c.kind = ParseScenarioKind(j.value("kind", std::string("synthetic")));
    c.max_budget = j.value("max_budget", c.max_budget);
    c.n_demands = j.value("n_demands", c.n_demands);
    c.horizon = j.value("horizon", c.horizon);
    c.seed = j.value("seed", c.seed);
    c.source_path = j.value("source_path", c.source_path);
    c.query_filter = j.value("query_filter", c.query_filter);
    c.keyword = j.value("keyword", c.keyword);
    c.n_candidates = j.value("n_candidates", c.n_candidates);
    c.n_bases = j.value("n_bases", c.n_bases);
    c.list_length = j.value("list_length", c.list_length);
    c.group_probability = j.value("group_probability", c.group_probability);
    c.open_neighborhood = j.value("open_neighborhood", c.open_neighborhood);
    c.n_items = j.value("n_items", c.n_items);
    c.subset_size = j.value("subset_size", c.subset_size);
    c.mode = ParseMode(j.value("mode", std::string(ModeName(c.mode))));
    c.values = j.value("values", c.values);
  } catch (const Json::exception& e) {
    ConfigError(std::string("scenario config: ") + e.what());
  }
  ValidateScenarioConfig(c);
  return c;
}

void ValidateScenarioConfig(const ScenarioConfig& c) {
  if (c.max_budget < 1) ConfigError("max_budget must be at least 1");
  if (c.horizon < 1) ConfigError("horizon must be at least 1");
  if (c.n_demands < 0) ConfigError("n_demands must be non-negative");
  if (c.n_items < 1) ConfigError("n_items must be at least 1");
  if (c.subset_size < 1) ConfigError("subset_size must be at least 1");
  if (c.n_candidates < 1) ConfigError("n_candidates must be at least 1");
  if (c.n_bases < 1) ConfigError("n_bases must be at least 1");
  if (c.list_length < 5) ConfigError("list_length must be at least 5");
  if (!(c.group_probability >= 0.0 && c.group_probability <= 1.0)) {
    ConfigError("group_probability must lie in [0, 1]");
  }
}

Instance Generate(const ScenarioConfig& config) {
  ValidateScenarioConfig(config);
  const bool has_file = !config.source_path.empty();
  auto open = [&]() {
    std::ifstream in(config.source_path);
    if (!in) ConfigError("cannot open " + config.source_path);
    return in;
  };
  switch (config.kind) {
    case ScenarioKind::kMusic: {
      if (has_file) {
        auto in = open();
        return GenMusic(in, config);
      }
      std::vector<std::string> songs;
      for (int s = 0; s < config.n_items; ++s) {
        songs.push_back("song" + std::to_string(s));
      }
      const int users = config.n_demands > 0 ? config.n_demands : 100;
      return WithGenerator(
          MusicFromTriples(
              SyntheticMusicTriples(users, config.n_items, config.seed),
              config, songs),
          config);
    }
    case ScenarioKind::kViral:
      return GenViral(config.source_path, config);
    case ScenarioKind::kWebrank: {
      if (has_file) {
        auto in = open();
        return GenWebrank(in, config);
      }
      std::ostringstream text;
      for (const Click& c : SyntheticClicks(config)) {
        text << c.user << ',' << c.query << ',' << c.page << '\n';
      }
      std::istringstream in(text.str());
      return GenWebrank(in, config);
    }
    case ScenarioKind::kDivrec: {
      if (has_file) {
        auto in = open();
        return GenDivrec(in, config);
      }
      std::istringstream in(SyntheticEmbeddingText(config));
      return GenDivrec(in, config);
    }
    case ScenarioKind::kOnlineSelection:
      return WithGenerator(GenOnlineSelection(config.values), config);
    case ScenarioKind::kSynthetic:
      return GenSynthetic(config);
  }
  ConfigError("unhandled scenario kind");
}

Instance GenMusic(std::istream& triples, const ScenarioConfig& config) {
  return WithGenerator(MusicFromTriples(ReadTriples(triples), config, {}),
                       config);
}

std::vector<MusicTriple> SyntheticMusicTriples(int n_users, int n_songs,
                                               std::uint64_t seed) {
  Rng rng = MakeRng(seed, "music:triples");
  std::vector<MusicTriple> rows;
  if (n_songs < 1) return rows;
  for (int u = 0; u < n_users; ++u) {
    const int listened =
        static_cast<int>(UniformInt(rng, 2, std::max(2, std::min(10, n_songs))));
    for (int j = 0; j < listened; ++j) {
      // Squaring a uniform draw favors low (popular) song ids.
      const double r = UniformReal(rng);
      const int song = std::min(n_songs - 1, static_cast<int>(n_songs * r * r));
      // Every user plays their first song at least twice.
      const int count = static_cast<int>(UniformInt(rng, j == 0 ? 2 : 1, 4));
      rows.push_back({"user" + std::to_string(u), "song" + std::to_string(song),
                      count});
    }
  }
  return rows;
}

Instance GenViral(const std::filesystem::path& edges,
                  const ScenarioConfig& config) {
  std::shared_ptr<const Graph> graph;
  if (edges.empty()) {
    graph = SyntheticGraph(config.n_items, config.seed);
  } else {
    EdgeList list = ReadEdgeList(edges, 0);
    auto g = std::make_shared<Graph>(Graph::FromEdges(list.num_nodes, list.edges));
    g->source_path = std::filesystem::absolute(edges).string();
    graph = std::move(g);
  }
  Instance instance;
  instance.n_items = graph->num_nodes;
  instance.mode = Mode::kMsrf;
  instance.allow_reuse = true;
  if (instance.n_items == 0) return WithGenerator(std::move(instance), config);
  Rng rng = MakeRng(config.seed, "viral");
  for (int i = 0; i < config.n_demands; ++i) {
    std::vector<ItemId> group;
    for (ItemId v = 0; v < instance.n_items; ++v) {
      if (UniformReal(rng) < config.group_probability) group.push_back(v);
    }
    if (group.empty()) {
      group.push_back(
          static_cast<ItemId>(UniformInt(rng, 0, instance.n_items - 1)));
    }
    Demand d;
    d.oracle = std::make_shared<NeighborhoodCoverage>(graph, std::move(group),
                                                      config.open_neighborhood);
    DrawTiming(rng, config, &d);
    instance.demands.push_back(std::move(d));
  }
  return WithGenerator(std::move(instance), config);
}

Instance GenWebrank(std::istream& click_log, const ScenarioConfig& config) {
  std::unordered_map<std::string, ItemId> page_ids, user_ids;
  std::vector<std::string> pages, users;
  std::vector<std::set<ItemId>> clicked;
  for (const Click& c : ReadClicks(click_log)) {
    if (c.query.find(config.query_filter) == std::string::npos) continue;
    const ItemId page = Intern(page_ids, pages, c.page);
    const ItemId user = Intern(user_ids, users, c.user);
    if (static_cast<std::size_t>(user) >= clicked.size()) clicked.emplace_back();
    clicked[user].insert(page);
  }
  Instance instance;
  instance.n_items = static_cast<int>(pages.size());
  instance.mode = Mode::kMsra;
  Rng rng = MakeRng(config.seed, "webrank");
  for (const auto& target : clicked) {
    if (config.n_demands > 0 &&
        static_cast<int>(instance.demands.size()) >= config.n_demands) {
      break;
    }
    Demand d;
    d.oracle = std::make_shared<CoverageFunction>(
        instance.n_items, std::vector<ItemId>(target.begin(), target.end()));
    d.budget = static_cast<int>(UniformInt(rng, 1, config.max_budget));
    d.slots = Prefix(d.budget);
    instance.demands.push_back(std::move(d));
  }
  return WithGenerator(std::move(instance), config);
}

Instance GenDivrec(std::istream& embeddings, const ScenarioConfig& config) {
  const Embeddings e = ReadEmbeddings(embeddings);
  if (e.words.empty()) ConfigError("divrec: no embeddings");
  const std::string keyword = config.keyword.empty() ? e.words[0] : config.keyword;
  const auto kw = std::find(e.words.begin(), e.words.end(), keyword);
  if (kw == e.words.end()) {
    ConfigError("divrec: keyword '" + keyword + "' is not in the vocabulary");
  }
  const auto& key = e.vectors[static_cast<std::size_t>(kw - e.words.begin())];

  std::vector<std::pair<double, std::size_t>> scored;
  for (std::size_t w = 0; w < e.words.size(); ++w) {
    if (e.words[w] == keyword) continue;
    scored.emplace_back(Dot(key, e.vectors[w]) - 0.5, w);
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  if (static_cast<int>(scored.size()) > config.n_candidates) {
    scored.resize(static_cast<std::size_t>(config.n_candidates));
  }
  const int n = static_cast<int>(scored.size());
  if (n == 0) ConfigError("divrec: no candidate words besides the keyword");

  bool clamped = false;
  auto clamp = [&](double x) {
    if (x < 0.0) {
      clamped = true;
      return 0.0;
    }
    return x;
  };
  std::vector<double> rel;
  for (const auto& [score, w] : scored) rel.push_back(clamp(score));
  Rng rng = MakeRng(config.seed, "divrec:bases");
  std::vector<ItemId> base = SampleDistinct(rng, n, config.n_bases);
  std::sort(base.begin(), base.end());
  std::vector<std::vector<double>> sim;
  for (ItemId u : base) {
    std::vector<double> row;
    row.reserve(static_cast<std::size_t>(n));
    const auto& uv = e.vectors[scored[static_cast<std::size_t>(u)].second];
    for (const auto& [score, w] : scored) {
      row.push_back(clamp(Dot(uv, e.vectors[w]) - 0.5));
    }
    sim.push_back(std::move(row));
  }
  if (clamped) log::Warning("divrec: negative scores clamped to 0");

  Instance instance;
  instance.n_items = n;
  instance.mode = Mode::kMsra;
  const int n_functions = config.list_length / 5;
  for (int i = 1; i <= n_functions; ++i) {
    Demand d;
    d.budget = 5 * i;
    d.slots = Prefix(d.budget);
    d.weight = std::pow(0.5, i);
    const double lambda = static_cast<double>(i - 1) / config.list_length;
    d.oracle = std::make_shared<DiversityRelevance>(rel, base, sim, lambda,
                                                    d.budget);
    instance.demands.push_back(std::move(d));
  }
  return WithGenerator(std::move(instance), config);
}

Instance GenOnlineSelection(std::span<const double> values) {
  if (values.empty()) ConfigError("online_selection needs at least one value");
  for (double a : values) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      ConfigError("online_selection values must be positive and finite");
    }
  }
  Instance instance;
  instance.n_items = static_cast<int>(values.size());
  instance.mode = Mode::kMsrf;
  instance.allow_reuse = false;
  for (std::size_t t = 0; t < values.size(); ++t) {
    std::vector<double> weights(values.size(), 0.0);
    weights[0] = values[t];
    Demand d;
    d.oracle = std::make_shared<ModularFunction>(std::move(weights));
    d.arrival = static_cast<int>(t + 1);
    d.budget = static_cast<int>(t + 1);
    instance.demands.push_back(std::move(d));
  }
  instance.Validate();
  return instance;
}

Instance GenSynthetic(const ScenarioConfig& config) {
  Instance instance;
  instance.n_items = config.n_items;
  instance.mode = config.mode;
  instance.allow_reuse = config.mode == Mode::kMsrf;
  Rng rng = MakeRng(config.seed, "synthetic");
  for (int i = 0; i < config.n_demands; ++i) {
    std::vector<ItemId> subset =
        SampleDistinct(rng, config.n_items, config.subset_size);
    Demand d;
    d.oracle = std::make_shared<CoverageFunction>(config.n_items, std::move(subset));
    if (config.mode == Mode::kMsrf) {
      DrawTiming(rng, config, &d);
    } else {
      d.budget = static_cast<int>(UniformInt(rng, 1, config.max_budget));
      if (config.mode != Mode::kMsr) d.slots = Prefix(d.budget);
    }
    instance.demands.push_back(std::move(d));
  }
  return WithGenerator(std::move(instance), config);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<ItemId> NonEmptySubset(Rng& rng, int n) {
  std::vector<ItemId> out;
  while (out.empty()) {
    for (ItemId v = 0; v < n; ++v) {
      if (UniformReal(rng) < 0.5) out.push_back(v);
    }
  }
  return out;
}

double Grid(Rng& rng) {
  // Coarse values make exact ties common, which exercises tie-breaking.
  return static_cast<double>(UniformInt(rng, 0, 8)) / 4.0;
}

std::shared_ptr<const SubmodularOracle> RandomOracle(Rng& rng, int n,
                                                     int budget, bool mixed) {
  const int family = mixed ? static_cast<int>(UniformInt(rng, 0, 4)) : 0;
  switch (family) {
    case 1: {
      std::vector<double> w(static_cast<std::size_t>(n));
      for (double& x : w) x = Grid(rng);
      return std::make_shared<ModularFunction>(std::move(w));
    }
    case 2: {
      std::vector<std::pair<ItemId, ItemId>> edges;
      for (ItemId u = 0; u < n; ++u) {
        for (ItemId v = u + 1; v < n; ++v) {
          if (UniformReal(rng) < 0.4) edges.emplace_back(u, v);
        }
      }
      auto graph = std::make_shared<Graph>(Graph::FromEdges(n, edges));
      return std::make_shared<NeighborhoodCoverage>(
          graph, NonEmptySubset(rng, n), UniformReal(rng) < 0.3);
    }
    case 3: {
      std::vector<double> rel(static_cast<std::size_t>(n));
      for (double& x : rel) x = Grid(rng);
      std::vector<std::vector<double>> sim(
          static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
      for (int u = 0; u < n; ++u) {
        sim[u][u] = 1.0;
        for (int v = u + 1; v < n; ++v) sim[u][v] = sim[v][u] = Grid(rng) / 2.0;
      }
      std::vector<ItemId> base(static_cast<std::size_t>(n));
      std::iota(base.begin(), base.end(), 0);
      const double lambda = static_cast<double>(UniformInt(rng, 0, 4)) / 4.0;
      return std::make_shared<DiversityRelevance>(std::move(rel), std::move(base),
                                                  std::move(sim), lambda, budget);
    }
    case 4: {
      std::vector<WeightedSumOracle::Component> parts;
      parts.push_back({std::make_shared<CoverageFunction>(n, NonEmptySubset(rng, n)),
                       1.0 + Grid(rng)});
      std::vector<double> w(static_cast<std::size_t>(n));
      for (double& x : w) x = Grid(rng);
      parts.push_back({std::make_shared<ModularFunction>(std::move(w)), 0.5});
      return std::make_shared<WeightedSumOracle>(std::move(parts));
    }
    default:
      return std::make_shared<CoverageFunction>(n, NonEmptySubset(rng, n));
  }
}

}  // namespace

Instance GenRandomSmall(const SmallInstanceOptions& options,
                        std::uint64_t seed, std::uint64_t index) {
  Rng rng = MakeRng(seed, "random_small", index);
  Instance instance;
  instance.mode = options.mode;
  instance.allow_reuse = options.allow_reuse;
  instance.n_items = static_cast<int>(UniformInt(rng, 2, std::max(2, options.max_items)));
  const int n = instance.n_items;
  const int m = static_cast<int>(UniformInt(rng, 1, options.max_demands));
  for (int i = 0; i < m; ++i) {
    Demand d;
    const int patience = static_cast<int>(UniformInt(rng, 1, options.max_budget));
    d.oracle = RandomOracle(rng, n, patience, options.mixed_families);
    if (options.mixed_families) {
      d.weight = static_cast<double>(UniformInt(rng, 1, 4)) / 2.0;
    }
    switch (options.mode) {
      case Mode::kMsrf:
        d.arrival = static_cast<int>(UniformInt(rng, 1, options.max_horizon));
        d.budget = d.arrival + patience - 1;
        break;
      case Mode::kMsr:
        d.budget = patience;
        break;
      case Mode::kMsra:
      case Mode::kMsri: {
        std::vector<ItemId> picks = SampleDistinct(rng, options.max_slot, patience);
        std::vector<Rank> slots;
        for (ItemId s : picks) slots.push_back(s + 1);
        std::sort(slots.begin(), slots.end());
        d.budget = static_cast<int>(slots.size());
        d.slots = std::move(slots);
        break;
      }
    }
    instance.demands.push_back(std::move(d));
  }
  using Base = SmallInstanceOptions::Base;
  if (options.base == Base::kUniform) {
    instance.base_matroid = std::make_shared<UniformMatroid>(
        static_cast<int>(UniformInt(rng, 1, n)), n);
  } else if (options.base == Base::kPartition) {
    std::vector<std::vector<ItemId>> groups(2);
    for (ItemId v = 0; v < n; ++v) {
      groups[static_cast<std::size_t>(UniformInt(rng, 0, 1))].push_back(v);
    }
    std::vector<int> caps;
    for (const auto& g : groups) {
      caps.push_back(static_cast<int>(
          UniformInt(rng, 1, std::max<std::int64_t>(1, static_cast<std::int64_t>(g.size())))));
    }
    instance.base_matroid =
        std::make_shared<PartitionMatroid>(std::move(groups), std::move(caps), n);
  }
  instance.generator = {{"kind", "random_small"},
                        {"seed", seed},
                        {"index", index},
                        {"mode", std::string(ModeName(options.mode))}};
  instance.Validate();
  return instance;
}

}  // namespace msr
