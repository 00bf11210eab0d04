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

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subcover/constraints.hpp"
#include "subcover/ground_set.hpp"
#include "subcover/objectives.hpp"

namespace subcover {

enum class ObjectiveKind { kSetCover, kWeightedCover, kGraphCut, kVertexCoverage, kLogDet };

const char* ObjectiveKindName(ObjectiveKind kind);
ObjectiveKind ParseObjectiveKind(const std::string& name);

inline constexpr int kInstanceSchemaVersion = 1;

struct InstanceFile {
  ObjectiveKind kind = ObjectiveKind::kSetCover;
  int n = 0;
  // set_cover / weighted_cover
  std::vector<std::vector<int>> tags;
  int tag_universe = 0;
  std::vector<double> tag_weights;
  // graph_cut / vertex_coverage
  std::vector<Edge> edges;
  // logdet, row-major n x n
  std::vector<double> kernel;

  std::vector<int> groups;
  std::optional<std::vector<double>> costs;

  std::string name;
  std::optional<std::uint64_t> seed;
  // Generator parameters, kept as strings so any value round-trips.
  std::map<std::string, std::string> params;

  // Throws kInvalidInstance when the payload does not match n.
  void Validate() const;
};

std::unique_ptr<Objective> make_objective(const InstanceFile& inst);
PartitionedGroundSet make_ground(const InstanceFile& inst);
// Unit costs when the instance carries none.
CostVector make_costs(const InstanceFile& inst);

// Tightness family. Standard greedy under caps k reaches
// k_1 (1/2 + eps); the optimum is k_1.
InstanceFile gen_hardness(const std::vector<int>& k, double eps);

// The 8-element set-cover example with tags a, b, c, d and groups {0..3},
// {4..7}. Under caps (2, 2) greedy reaches 2 and the optimum is 4.
InstanceFile gen_toy_example();

struct SetCoverParams {
  int groups = 5;
  int base_size = 200;
  int increment = 40;
  int shared_block = 100;
  int tags_per_element = 25;
};
InstanceFile gen_synthetic_setcover(std::uint64_t seed, const SetCoverParams& params);

// Uniform simple graph with m edges, uniform labels and weights in [w_lo, w_hi].
InstanceFile gen_random_graph(std::uint64_t seed, int n, int m, int groups,
                              double w_lo, double w_hi,
                              ObjectiveKind kind = ObjectiveKind::kGraphCut);

// Uniform labels in [0, groups); every group receives at least one element.
InstanceFile assign_random_groups(InstanceFile inst, std::uint64_t seed, int groups);

InstanceFile assign_costs(InstanceFile inst, std::uint64_t seed, double lo = 0.001,
                          double hi = 10.0);

// Whitespace-separated "u v [w]" lines, '#' comments. Ids are compacted in
// order of first appearance; every node lands in group 0.
InstanceFile load_edge_list(const std::string& path,
                            ObjectiveKind kind = ObjectiveKind::kGraphCut);

std::string serialize_instance(const InstanceFile& inst);
InstanceFile parse_instance(const std::string& text);
void save_instance(const InstanceFile& inst, const std::string& path);
InstanceFile load_instance(const std::string& path);

}  // namespace subcover
