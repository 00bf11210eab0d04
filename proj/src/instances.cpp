// Copyright 2026 The Authors.
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

#include "subcover/instances.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "subcover/errors.hpp"
#include "subcover/rng.hpp"

namespace subcover {
namespace {

using nlohmann::json;

std::string FormatDouble(double x) { return json(x).dump(); }

void Invalid(const std::string& what) { throw Error(ErrorCode::kInvalidInstance, what); }

// Index in [0, n(n-1)/2) to the pair (u, v), u < v, in row-major order.
Edge PairAt(std::int64_t idx, int n) {
  int u = 0;
  std::int64_t row = n - 1;
  while (idx >= row) {
    idx -= row;
    ++u;
    --row;
  }
  return {u, static_cast<Element>(u + 1 + idx), 1.0};
}

}  // namespace

const char* ObjectiveKindName(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kSetCover: return "set_cover";
    case ObjectiveKind::kWeightedCover: return "weighted_cover";
    case ObjectiveKind::kGraphCut: return "graph_cut";
    case ObjectiveKind::kVertexCoverage: return "vertex_coverage";
    case ObjectiveKind::kLogDet: return "logdet";
  }
  return "unknown";
}

ObjectiveKind ParseObjectiveKind(const std::string& name) {
  for (auto kind : {ObjectiveKind::kSetCover, ObjectiveKind::kWeightedCover,
                    ObjectiveKind::kGraphCut, ObjectiveKind::kVertexCoverage,
                    ObjectiveKind::kLogDet}) {
    if (name == ObjectiveKindName(kind)) return kind;
  }
  throw Error(ErrorCode::kParse, "unknown objective kind '" + name + "'");
}

void InstanceFile::Validate() const {
  if (n <= 0) Invalid("instance has no elements");
  if (static_cast<int>(groups.size()) != n) Invalid("need one group label per element");
  if (costs) {
    if (static_cast<int>(costs->size()) != n) Invalid("need one cost per element");
    for (double c : *costs) {
      if (!(c > 0.0) || !std::isfinite(c)) Invalid("costs must be positive and finite");
    }
  }
  switch (kind) {
    case ObjectiveKind::kSetCover:
    case ObjectiveKind::kWeightedCover:
      if (static_cast<int>(tags.size()) != n) Invalid("need one tag list per element");
      for (const auto& t : tags) {
        for (int tag : t) {
          if (tag < 0 || tag >= tag_universe) Invalid("tag id outside universe");
        }
      }
      if (kind == ObjectiveKind::kWeightedCover &&
          static_cast<int>(tag_weights.size()) != tag_universe) {
        Invalid("need one weight per tag");
      }
      break;
    case ObjectiveKind::kGraphCut:
    case ObjectiveKind::kVertexCoverage:
      for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) Invalid("edge endpoint out of range");
        if (!(e.w >= 0.0) || !std::isfinite(e.w)) Invalid("edge weights must be finite and >= 0");
      }
      break;
    case ObjectiveKind::kLogDet:
      if (kernel.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
        Invalid("kernel must be n x n");
      }
      break;
  }
}

std::unique_ptr<Objective> make_objective(const InstanceFile& inst) {
  inst.Validate();
  switch (inst.kind) {
    case ObjectiveKind::kSetCover:
      return std::make_unique<SetCoverObjective>(inst.tags, inst.tag_universe);
    case ObjectiveKind::kWeightedCover:
      return std::make_unique<WeightedCoverObjective>(inst.tags, inst.tag_weights);
    case ObjectiveKind::kGraphCut:
      return std::make_unique<GraphCutObjective>(WeightedGraph(inst.n, inst.edges));
    case ObjectiveKind::kVertexCoverage:
      return std::make_unique<VertexCoverageObjective>(WeightedGraph(inst.n, inst.edges));
    case ObjectiveKind::kLogDet:
      return std::make_unique<LogDetObjective>(inst.n, inst.kernel);
  }
  Invalid("unknown objective kind");
  return nullptr;
}

PartitionedGroundSet make_ground(const InstanceFile& inst) {
  return PartitionedGroundSet(inst.groups);
}

CostVector make_costs(const InstanceFile& inst) {
  return inst.costs ? CostVector(*inst.costs) : CostVector::Unit(inst.n);
}

InstanceFile gen_hardness(const std::vector<int>& k, double eps) {
  if (!(eps > 0.0 && eps < 0.5)) {
    throw Error(ErrorCode::kInvalidParameter, "eps must lie in (0, 0.5)");
  }
  if (k.empty() || k.front() < 1 || !std::is_sorted(k.begin(), k.end())) {
    throw Error(ErrorCode::kInvalidParameter,
                "k must be positive and sorted in nondecreasing order");
  }
  const int k1 = k.front();
  // Tags: shared_j = j, extra_j = k1 + j, private tags from 2 k1 on.
  InstanceFile inst;
  inst.kind = ObjectiveKind::kWeightedCover;
  inst.tag_universe = 3 * k1;
  inst.tag_weights.assign(static_cast<size_t>(inst.tag_universe), 0.5);
  for (int j = 0; j < k1; ++j) inst.tag_weights[static_cast<size_t>(k1 + j)] = eps;
  for (size_t i = 0; i < k.size(); ++i) {
    for (int j = 0; j < 2 * k[i]; ++j) {
      if (i == 0) {
        inst.tags.push_back(j < k1 ? std::vector<int>{j, k1 + j}
                                   : std::vector<int>{2 * k1 + (j - k1)});
      } else {
        inst.tags.push_back({j < k1 ? j : 0});
      }
      inst.groups.push_back(static_cast<int>(i));
    }
  }
  inst.n = static_cast<int>(inst.tags.size());
  inst.name = "hardness";
  std::string ks;
  for (size_t i = 0; i < k.size(); ++i) ks += (i ? "," : "") + std::to_string(k[i]);
  inst.params = {{"eps", FormatDouble(eps)}, {"k", ks}};
  return inst;
}

InstanceFile gen_toy_example() {
  InstanceFile inst;
  inst.kind = ObjectiveKind::kSetCover;
  inst.n = 8;
  inst.tag_universe = 4;
  // a = 0, b = 1, c = 2, d = 3.
  inst.tags = {{0}, {1}, {2}, {3}, {0}, {1}, {0}, {0}};
  inst.groups = {0, 0, 0, 0, 1, 1, 1, 1};
  inst.name = "toy";
  inst.params = {{"k", "2,2"}};
  return inst;
}

InstanceFile gen_synthetic_setcover(std::uint64_t seed, const SetCoverParams& params) {
  if (params.groups < 2 || params.base_size < 1 || params.increment < 0 ||
      params.shared_block < 0 || params.tags_per_element < 1) {
    throw Error(ErrorCode::kInvalidParameter, "malformed synthetic set-cover parameters");
  }
  InstanceFile inst;
  inst.kind = ObjectiveKind::kSetCover;
  int next_tag = 0;
  auto fresh = [&] {
    std::vector<int> t(static_cast<size_t>(params.tags_per_element));
    std::iota(t.begin(), t.end(), next_tag);
    next_tag += params.tags_per_element;
    return t;
  };
  for (int i = 0; i < params.groups; ++i) {
    const int size = params.base_size + params.increment * i;
    const std::vector<int> shared = i > 0 ? fresh() : std::vector<int>{};
    for (int j = 0; j < size; ++j) {
      inst.tags.push_back(i > 0 && j < params.shared_block ? shared : fresh());
      inst.groups.push_back(i);
    }
  }
  inst.n = static_cast<int>(inst.tags.size());
  inst.tag_universe = next_tag;

  // Interleave the groups; only the tie-break order depends on the seed.
  std::vector<size_t> order(static_cast<size_t>(inst.n));
  std::iota(order.begin(), order.end(), 0);
  SeededRng rng(seed);
  for (size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.UniformIndex(i)]);
  }
  InstanceFile shuffled = inst;
  for (size_t x = 0; x < order.size(); ++x) {
    shuffled.tags[x] = inst.tags[order[x]];
    shuffled.groups[x] = inst.groups[order[x]];
  }
  shuffled.name = "synthetic_setcover";
  shuffled.seed = seed;
  shuffled.params = {{"base_size", std::to_string(params.base_size)},
                     {"groups", std::to_string(params.groups)},
                     {"increment", std::to_string(params.increment)},
                     {"shared_block", std::to_string(params.shared_block)},
                     {"tags_per_element", std::to_string(params.tags_per_element)}};
  return shuffled;
}

InstanceFile assign_random_groups(InstanceFile inst, std::uint64_t seed, int groups) {
  if (groups < 1 || groups > inst.n) {
    throw Error(ErrorCode::kInvalidParameter, "need 1 <= groups <= n");
  }
  SeededRng rng(seed, 1);
  std::vector<int> order(static_cast<size_t>(inst.n));
  std::iota(order.begin(), order.end(), 0);
  for (size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.UniformIndex(i)]);
  }
  // The first `groups` elements of a random order seed every group once.
  for (size_t t = 0; t < order.size(); ++t) {
    inst.groups[static_cast<size_t>(order[t])] =
        t < static_cast<size_t>(groups)
            ? static_cast<int>(t)
            : static_cast<int>(rng.UniformIndex(static_cast<std::uint64_t>(groups)));
  }
  inst.params["groups"] = std::to_string(groups);
  return inst;
}

InstanceFile gen_random_graph(std::uint64_t seed, int n, int m, int groups,
                              double w_lo, double w_hi, ObjectiveKind kind) {
  if (n < 2 || m < 0) throw Error(ErrorCode::kInvalidParameter, "need n >= 2 and m >= 0");
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m > total) throw Error(ErrorCode::kInvalidParameter, "m exceeds n(n-1)/2");
  if (!(w_lo >= 0.0 && w_lo <= w_hi)) {
    throw Error(ErrorCode::kInvalidParameter, "need 0 <= w_lo <= w_hi");
  }
  if (kind != ObjectiveKind::kGraphCut && kind != ObjectiveKind::kVertexCoverage) {
    throw Error(ErrorCode::kInvalidParameter, "graph generator needs a graph objective");
  }
  SeededRng rng(seed);
  // Floyd's sampling of m distinct pair indices.
  std::unordered_set<std::int64_t> chosen;
  std::vector<std::int64_t> picks;
  for (std::int64_t j = total - m; j < total; ++j) {
    const auto t = static_cast<std::int64_t>(rng.UniformIndex(static_cast<std::uint64_t>(j + 1)));
    const std::int64_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    picks.push_back(pick);
  }
  std::sort(picks.begin(), picks.end());
  InstanceFile inst;
  inst.kind = kind;
  inst.n = n;
  for (std::int64_t idx : picks) {
    Edge e = PairAt(idx, n);
    e.w = rng.Uniform(w_lo, w_hi);
    inst.edges.push_back(e);
  }
  inst.groups.assign(static_cast<size_t>(n), 0);
  inst = assign_random_groups(std::move(inst), seed, groups);
  inst.name = "random_graph";
  inst.seed = seed;
  inst.params = {{"groups", std::to_string(groups)},
                 {"m", std::to_string(m)},
                 {"n", std::to_string(n)},
                 {"w_hi", FormatDouble(w_hi)},
                 {"w_lo", FormatDouble(w_lo)}};
  return inst;
}

InstanceFile assign_costs(InstanceFile inst, std::uint64_t seed, double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::kInvalidParameter, "need 0 < lo <= hi");
  }
  SeededRng rng(seed, 2);
  std::vector<double> c(static_cast<size_t>(inst.n));
  for (double& x : c) x = rng.Uniform(lo, hi);
  inst.costs = std::move(c);
  inst.params["cost_lo"] = FormatDouble(lo);
  inst.params["cost_hi"] = FormatDouble(hi);
  inst.params["cost_seed"] = std::to_string(seed);
  return inst;
}

InstanceFile load_edge_list(const std::string& path, ObjectiveKind kind) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::map<std::string, int> ids;
  auto id_of = [&](const std::string& token) {
    return ids.try_emplace(token, static_cast<int>(ids.size())).first->second;
  };
  std::map<std::pair<int, int>, double> merged;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    double w = 1.0;
    auto is_int = [](const std::string& s) {
      if (s.empty()) return false;
      size_t i = (s[0] == '-') ? 1 : 0;
      return i < s.size() && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                                         [](char c) { return c >= '0' && c <= '9'; });
    };
    bool ok = is_int(a) && is_int(b);
    if (ok && fields >> extra) {
      try {
        size_t used = 0;
        w = std::stod(extra, &used);
        ok = used == extra.size() && std::isfinite(w) && w >= 0.0;
      } catch (const std::exception&) {
        ok = false;
      }
      std::string more;
      if (fields >> more) ok = false;
    }
    if (!ok) {
      throw Error(ErrorCode::kParse,
                  path + ":" + std::to_string(lineno) + ": expected 'u v [w]'");
    }
    const int u = id_of(a);
    const int v = id_of(b);
    merged[{std::min(u, v), std::max(u, v)}] += w;
  }
  if (merged.empty()) Invalid("edge list has no edges");
  InstanceFile inst;
  inst.kind = kind;
  inst.n = static_cast<int>(ids.size());
  for (const auto& [key, w] : merged) {
    if (key.first != key.second) inst.edges.push_back({key.first, key.second, w});
  }
  inst.groups.assign(static_cast<size_t>(inst.n), 0);
  inst.name = path;
  return inst;
}

std::string serialize_instance(const InstanceFile& inst) {
  inst.Validate();
  json doc;
  doc["schema_version"] = kInstanceSchemaVersion;
  doc["objective"] = ObjectiveKindName(inst.kind);
  doc["n"] = inst.n;
  doc["groups"] = inst.groups;
  if (inst.costs) doc["costs"] = *inst.costs;
  doc["name"] = inst.name;
  if (inst.seed) doc["seed"] = *inst.seed;
  doc["params"] = inst.params;
  switch (inst.kind) {
    case ObjectiveKind::kWeightedCover:
      doc["tag_weights"] = inst.tag_weights;
      [[fallthrough]];
    case ObjectiveKind::kSetCover:
      doc["tags"] = inst.tags;
      doc["tag_universe"] = inst.tag_universe;
      break;
    case ObjectiveKind::kGraphCut:
    case ObjectiveKind::kVertexCoverage: {
      json edges = json::array();
      for (const Edge& e : inst.edges) edges.push_back({e.u, e.v, e.w});
      doc["edges"] = std::move(edges);
      break;
    }
    case ObjectiveKind::kLogDet:
      doc["kernel"] = inst.kernel;
      break;
  }
  // One top-level key per line, keys in sorted order.
  std::string out = "{\n";
  bool first = true;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + json(it.key()).dump() + ": " + it.value().dump();
  }
  out += "\n}\n";
  return out;
}

InstanceFile parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed instance: ") + e.what());
  }
  InstanceFile inst;
  try {
    if (doc.at("schema_version").get<int>() != kInstanceSchemaVersion) {
      throw Error(ErrorCode::kParse, "unsupported schema version");
    }
    inst.kind = ParseObjectiveKind(doc.at("objective").get<std::string>());
    inst.n = doc.at("n").get<int>();
    inst.groups = doc.at("groups").get<std::vector<int>>();
    if (doc.contains("costs")) inst.costs = doc["costs"].get<std::vector<double>>();
    inst.name = doc.value("name", "");
    if (doc.contains("seed")) inst.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("params")) {
      inst.params = doc["params"].get<std::map<std::string, std::string>>();
    }
    switch (inst.kind) {
      case ObjectiveKind::kWeightedCover:
        inst.tag_weights = doc.at("tag_weights").get<std::vector<double>>();
        [[fallthrough]];
      case ObjectiveKind::kSetCover:
        inst.tags = doc.at("tags").get<std::vector<std::vector<int>>>();
        inst.tag_universe = doc.at("tag_universe").get<int>();
        break;
      case ObjectiveKind::kGraphCut:
      case ObjectiveKind::kVertexCoverage:
        for (const auto& e : doc.at("edges")) {
          if (!e.is_array() || e.size() != 3) {
            throw Error(ErrorCode::kParse, "edges must be [u, v, w] triples");
          }
          inst.edges.push_back({e[0].get<Element>(), e[1].get<Element>(), e[2].get<double>()});
        }
        break;
      case ObjectiveKind::kLogDet:
        inst.kernel = doc.at("kernel").get<std::vector<double>>();
        break;
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed instance: ") + e.what());
  }
  inst.Validate();
  return inst;
}

void save_instance(const InstanceFile& inst, const std::string& path) {
  const std::string text = serialize_instance(inst);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kInvalidInput, "failed writing '" + path + "'");
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

}  // namespace subcover
