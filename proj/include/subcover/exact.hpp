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

#include "subcover/constraints.hpp"
#include "subcover/ground_set.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

inline constexpr int kMaxExactSize = 22;

struct ExactResult {
  ElementSet S_opt;  // ascending
  double value = 0.0;  // max f, min v, or min |S|
  std::uint64_t enumerated = 0;
  // brute_force_sckp only: min c(S) with f(S) >= tau and
  // c(S ∩ U_j) <= p_j c(S) + max cost in U_j.
  std::optional<double> p1_value;
};

// Every solver throws kInstanceTooLarge for n > 22 before spending a query.
// Queries are charged one per evaluated subset.
ExactResult brute_force_smp(QueryCountedOracle& oracle,
                            const PartitionedGroundSet& ground,
                            std::span<const int> caps);

ExactResult brute_force_smkp(QueryCountedOracle& oracle,
                             const PartitionedGroundSet& ground,
                             const CostVector& costs,
                             const PartitionProportions& p, double v);

ExactResult brute_force_scp(QueryCountedOracle& oracle,
                            const PartitionedGroundSet& ground,
                            const PartitionProportions& p, double tau);

ExactResult brute_force_sckp(QueryCountedOracle& oracle,
                             const PartitionedGroundSet& ground,
                             const CostVector& costs,
                             const PartitionProportions& p, double tau);

ExactResult brute_force_smf(QueryCountedOracle& oracle,
                            const PartitionedGroundSet& ground,
                            const FairnessMatroid& m);

ExactResult brute_force_scf(QueryCountedOracle& oracle,
                            const PartitionedGroundSet& ground,
                            std::span<const double> p_lo,
                            std::span<const double> p_hi, double tau);

// Best subset of at most `kappa` elements, ignoring groups.
ExactResult brute_force_cardinality(QueryCountedOracle& oracle, int kappa);

}  // namespace subcover
