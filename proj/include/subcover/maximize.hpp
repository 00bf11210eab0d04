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
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "subcover/constraints.hpp"
#include "subcover/ground_set.hpp"
#include "subcover/oracle.hpp"
#include "subcover/rng.hpp"

namespace subcover {

// Default for the optional stop_at argument: run the full schedule.
inline constexpr double kNoStop = std::numeric_limits<double>::infinity();

// Cost committed to one group during one round of greedy_knapsack_bi.
struct BlockTrace {
  int round = 0;
  int group = 0;
  double added_cost = 0.0;
  bool exhausted = false;  // eligible pool ran dry before reaching B_j
};

struct MaxResult {
  ElementSet S;  // selection order
  double f_value = 0.0;
  std::int64_t queries = 0;
  std::vector<int> per_group_counts;
  std::vector<double> per_group_costs;
  std::vector<BlockTrace> trace;
  bool pool_exhausted = false;
};

struct BlockSchedule {
  int phi = 0;
  std::vector<int> r;
};

// phi = floor(sqrt(min k)) - 1, r_j = floor(k_j / phi). phi may be < 1.
BlockSchedule block_schedule_mono(std::span<const int> caps);
// phi = gcd(k), r_j = k_j / phi.
BlockSchedule block_schedule_gcd(std::span<const int> caps);

int nonmono_bi_rounds(double eps);                  // ceil(2 / eps)
int nonmono_bi_steps(double pv);                    // floor(p_j v)
int nonmono_bi_candidates(double pv, double eps);   // ceil(2 p_j v / eps)
int halving_rounds(double eps);                     // ceil(ln(1/eps) / ln 2)

// Every maximizer taking stop_at returns as soon as f(S) >= stop_at; the
// result is then a prefix of the full run.

// Randomized blocks of floor(p_j v) picks per group, each drawn uniformly
// from the ceil(2 p_j v / eps) best candidates padded with dummies.
MaxResult nonmono_bi(QueryCountedOracle& oracle,
                     const PartitionedGroundSet& ground,
                     const PartitionProportions& p, double v, double eps,
                     SeededRng& rng, double stop_at = kNoStop);

MaxResult greedy_knapsack_bi(QueryCountedOracle& oracle,
                             const PartitionedGroundSet& ground,
                             const CostVector& costs,
                             const PartitionProportions& p, double v,
                             double eps, double stop_at = kNoStop);

MaxResult block_fair_bi(QueryCountedOracle& oracle,
                        const PartitionedGroundSet& ground,
                        const FairnessMatroid& m, double eps,
                        double stop_at = kNoStop);

// Generic outer loop: phi rounds, groups in ascending order.
using BlockSubroutine = std::function<void(Session&, int round, int group)>;
void block_greedy(Session& session, const PartitionedGroundSet& ground,
                  int phi, const BlockSubroutine& subroutine);

MaxResult block_greedy_mono(QueryCountedOracle& oracle,
                            const PartitionedGroundSet& ground,
                            std::span<const int> caps);

MaxResult block_greedy_gcd(QueryCountedOracle& oracle,
                           const PartitionedGroundSet& ground,
                           std::span<const int> caps);

MaxResult block_greedy_nonmono(QueryCountedOracle& oracle,
                               const PartitionedGroundSet& ground,
                               std::span<const int> caps, SeededRng& rng);

// Standard greedy under partition caps, started from s0.
MaxResult greedy_augment(QueryCountedOracle& oracle,
                         const PartitionedGroundSet& ground,
                         std::span<const int> caps,
                         std::span<const Element> s0);

// Adds the best feasible element (zero or negative gain included) until no
// feasible extension remains. `independence` must start empty.
MaxResult standard_greedy_matroid(QueryCountedOracle& oracle,
                                  const PartitionedGroundSet& ground,
                                  IndependenceOracle& independence,
                                  double stop_at = kNoStop);

MaxResult random_greedy_cardinality(QueryCountedOracle& oracle,
                                    const PartitionedGroundSet& ground,
                                    int kappa, SeededRng& rng,
                                    double stop_at = kNoStop);

// Cost-density greedy that respects c(S ∩ U_j) <= p_j v at every step.
MaxResult greedy_density_knapsack(QueryCountedOracle& oracle,
                                  const PartitionedGroundSet& ground,
                                  const CostVector& costs,
                                  const PartitionProportions& p, double v,
                                  double stop_at = kNoStop);

}  // namespace subcover
