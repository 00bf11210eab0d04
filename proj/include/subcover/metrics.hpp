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
#include <optional>
#include <span>

#include "subcover/ground_set.hpp"

namespace subcover {

struct RunMetrics {
  double f_value = 0.0;
  // max_j c(S ∩ U_j) / p_j, unit costs when no cost vector is given.
  double budget = 0.0;
  int solution_size = 0;
  // (max_c |S ∩ U_c| - min_c |S ∩ U_c|) / |S|, zero for the empty set.
  double fairness_diff = 0.0;
  std::int64_t queries = 0;
  double time_ms = 0.0;
};

// Throws kInvalidProportions when any p_j <= 0. Without `p`, uniform 1/N is
// used.
RunMetrics compute_metrics(std::span<const Element> s,
                           const PartitionedGroundSet& ground,
                           std::span<const double> costs,
                           std::span<const double> p, double f_value,
                           std::int64_t queries, double time_ms);

}  // namespace subcover
