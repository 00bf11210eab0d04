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

#include "subcover/metrics.hpp"

#include <algorithm>

#include "subcover/errors.hpp"

namespace subcover {

RunMetrics compute_metrics(std::span<const Element> s,
                           const PartitionedGroundSet& ground,
                           std::span<const double> costs,
                           std::span<const double> p, double f_value,
                           std::int64_t queries, double time_ms) {
  const int groups = ground.num_groups();
  if (!p.empty() && static_cast<int>(p.size()) != groups) {
    throw Error(ErrorCode::kInvalidProportions,
                "proportion count does not match group count");
  }
  for (double pj : p) {
    if (!(pj > 0.0)) {
      throw Error(ErrorCode::kInvalidProportions, "proportions must be positive");
    }
  }

  RunMetrics m;
  m.f_value = f_value;
  m.solution_size = static_cast<int>(s.size());
  m.queries = queries;
  m.time_ms = time_ms;
  if (s.empty()) return m;

  const std::vector<double> group_cost = ground.GroupCosts(s, costs);
  for (int j = 0; j < groups; ++j) {
    const double pj = p.empty() ? 1.0 / groups : p[static_cast<size_t>(j)];
    m.budget = std::max(m.budget, group_cost[static_cast<size_t>(j)] / pj);
  }
  const std::vector<int> counts = ground.GroupCounts(s);
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  m.fairness_diff = static_cast<double>(*hi - *lo) / static_cast<double>(s.size());
  return m;
}

}  // namespace subcover
