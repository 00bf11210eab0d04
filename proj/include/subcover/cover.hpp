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
#include <span>
#include <vector>

#include "subcover/constraints.hpp"
#include "subcover/ground_set.hpp"
#include "subcover/maximize.hpp"
#include "subcover/oracle.hpp"
#include "subcover/rng.hpp"

namespace subcover {

enum class ConstraintFamily { kPartition, kKnapsackPartition, kFairnessExtension };

struct CoverResult {
  ElementSet S;
  double v_S = 0.0;  // certified budget, or |S| for the fairness converter
  double f_value = 0.0;
  int guesses_tried = 0;
  std::int64_t queries = 0;
  ConstraintFamily family = ConstraintFamily::kPartition;
  // The family's predicate holds for (S, v_S).
  bool certified = false;
  double threshold = 0.0;  // stopping threshold that f_value cleared
};

// A randomized SMP routine run at budget v. Each call gets its own oracle and
// stream so repetitions can run side by side. Every run may return once
// f(S) >= stop_at.
struct SmpMaximizer {
  double gamma = 0.0;
  double beta = 1.0;
  std::function<MaxResult(QueryCountedOracle&, double v, SeededRng&, double stop_at)> run;
};

struct SmkpMaximizer {
  double gamma = 0.0;
  double beta = 1.0;
  std::function<MaxResult(QueryCountedOracle&, double v, double stop_at)> run;
};

struct SmfMaximizer {
  double gamma = 0.0;
  int beta = 1;
  std::function<MaxResult(QueryCountedOracle&, const FairnessMatroid&, double stop_at)> run;
};

// nonmono_bi as (1/e - eps, ceil(2/eps)).
SmpMaximizer nonmono_bi_maximizer(const PartitionedGroundSet& ground,
                                  const PartitionProportions& p, double eps);
// Random greedy with kappa = floor(v), ignoring groups: (1/e, 1/min p).
SmpMaximizer random_greedy_maximizer(const PartitionedGroundSet& ground,
                                     const PartitionProportions& p);
// greedy_knapsack_bi as (1 - eps, 2 * halving_rounds(eps)).
SmkpMaximizer greedy_knapsack_bi_maximizer(const PartitionedGroundSet& ground,
                                           const CostVector& costs,
                                           const PartitionProportions& p,
                                           double eps);
// Density greedy inside the knapsack partition; no guarantee, beta = 1.
SmkpMaximizer density_greedy_maximizer(const PartitionedGroundSet& ground,
                                       const CostVector& costs,
                                       const PartitionProportions& p,
                                       double gamma);
// block_fair_bi as (1 - eps, halving_rounds(eps)).
SmfMaximizer block_fair_bi_maximizer(const PartitionedGroundSet& ground,
                                     double eps);
// Plain fair greedy, beta = 1.
SmfMaximizer fair_greedy_maximizer(const PartitionedGroundSet& ground,
                                   double gamma);

// With early_stop the converters hand their acceptance threshold to the
// maximizer as stop_at, so each run ends once f(S) clears it.

// R = ceil(ln(1/delta) / ln((beta - gamma + eps) / (beta - gamma))).
int convert_rand_repetitions(double gamma, double beta, double eps,
                             double delta);

CoverResult convert_rand(const SmpMaximizer& maximizer,
                         QueryCountedOracle& oracle,
                         const PartitionedGroundSet& ground,
                         const PartitionProportions& p, double tau, double eps,
                         double delta, double alpha, const SeededRng& rng,
                         bool early_stop = true);

CoverResult convert_knapsack(const SmkpMaximizer& maximizer,
                             QueryCountedOracle& oracle,
                             const PartitionedGroundSet& ground,
                             const CostVector& costs,
                             const PartitionProportions& p, double tau,
                             double alpha, bool early_stop = true);

CoverResult convert_fair(const SmfMaximizer& maximizer,
                         QueryCountedOracle& oracle,
                         const PartitionedGroundSet& ground,
                         std::span<const double> p_lo,
                         std::span<const double> p_hi, double tau,
                         double alpha, bool early_stop = true);

// Integer guesses k <- max(k + 1, ceil((1 + alpha) k)), starting at 1.
std::vector<int> fair_guess_grid(double alpha, int limit);

// Unconstrained cost-density greedy until f(S) >= (1 - eps) tau. v_S is the
// measured budget max_j c(S ∩ U_j) / p_j.
CoverResult greedy_knapsack_cover(QueryCountedOracle& oracle,
                                  const PartitionedGroundSet& ground,
                                  const CostVector& costs,
                                  const PartitionProportions& p, double tau,
                                  double eps);

}  // namespace subcover
