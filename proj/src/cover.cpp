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

#include "subcover/cover.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <optional>

#include "subcover/errors.hpp"
#include "subcover/kernels.hpp"

namespace subcover {
namespace {

constexpr double kSnap = 1e-9;
// Repetitions of one guess are launched in fixed-size chunks; the guess stops
// after the first chunk holding a success, so query totals do not depend on
// the thread count.
constexpr int kRepetitionChunk = 16;

void RequireAlpha(double alpha) {
  if (!(alpha > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "alpha must be positive");
  }
}

void RequireTau(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw Error(ErrorCode::kInvalidParameter, "tau must be a finite value >= 0");
  }
}

// Only meaningful for monotone f: graph cut has f(U) = 0.
void CheckAttainable(QueryCountedOracle& oracle, const PartitionedGroundSet& ground,
                     double tau) {
  if (!oracle.objective().monotone()) return;
  const double full = oracle.Evaluate(ground.all());
  if (tau > full + kSnap) {
    throw Error(ErrorCode::kInfeasibleThreshold, "tau exceeds f(U)");
  }
}

CoverResult EmptyCover(QueryCountedOracle& oracle, ConstraintFamily family,
                       double v_S, std::int64_t start) {
  CoverResult out;
  out.f_value = oracle.Evaluate({});
  out.v_S = v_S;
  out.guesses_tried = 1;
  out.family = family;
  out.certified = true;
  out.queries = oracle.queries() - start;
  return out;
}

bool IsDegenerate(const Error& e) { return e.code() == ErrorCode::kDegenerateBudget; }

}  // namespace

SmpMaximizer nonmono_bi_maximizer(const PartitionedGroundSet& ground,
                                  const PartitionProportions& p, double eps) {
  SmpMaximizer m;
  m.gamma = 1.0 / std::numbers::e - eps;
  m.beta = nonmono_bi_rounds(eps);
  m.run = [&ground, p, eps](QueryCountedOracle& oracle, double v, SeededRng& rng,
                               double stop_at) {
    return nonmono_bi(oracle, ground, p, v, eps, rng, stop_at);
  };
  return m;
}

SmpMaximizer random_greedy_maximizer(const PartitionedGroundSet& ground,
                                     const PartitionProportions& p) {
  SmpMaximizer m;
  m.gamma = 1.0 / std::numbers::e;
  m.beta = 1.0 / p.min();
  m.run = [&ground](QueryCountedOracle& oracle, double v, SeededRng& rng, double stop_at) {
    const int kappa = std::min(ground.size(), static_cast<int>(std::floor(v + kSnap)));
    if (kappa < 1) throw Error(ErrorCode::kDegenerateBudget, "budget below 1");
    return random_greedy_cardinality(oracle, ground, kappa, rng, stop_at);
  };
  return m;
}

SmkpMaximizer greedy_knapsack_bi_maximizer(const PartitionedGroundSet& ground,
                                           const CostVector& costs,
                                           const PartitionProportions& p,
                                           double eps) {
  SmkpMaximizer m;
  m.gamma = 1.0 - eps;
  m.beta = 2.0 * halving_rounds(eps);
  m.run = [&ground, costs, p, eps](QueryCountedOracle& oracle, double v, double stop_at) {
    return greedy_knapsack_bi(oracle, ground, costs, p, v, eps, stop_at);
  };
  return m;
}

SmkpMaximizer density_greedy_maximizer(const PartitionedGroundSet& ground,
                                       const CostVector& costs,
                                       const PartitionProportions& p,
                                       double gamma) {
  SmkpMaximizer m;
  m.gamma = gamma;
  m.beta = 1.0;
  m.run = [&ground, costs, p](QueryCountedOracle& oracle, double v, double stop_at) {
    return greedy_density_knapsack(oracle, ground, costs, p, v, stop_at);
  };
  return m;
}

SmfMaximizer block_fair_bi_maximizer(const PartitionedGroundSet& ground,
                                     double eps) {
  SmfMaximizer m;
  m.gamma = 1.0 - eps;
  m.beta = halving_rounds(eps);
  m.run = [&ground, eps](QueryCountedOracle& oracle, const FairnessMatroid& fm,
                         double stop_at) {
    return block_fair_bi(oracle, ground, fm, eps, stop_at);
  };
  return m;
}

SmfMaximizer fair_greedy_maximizer(const PartitionedGroundSet& ground,
                                   double gamma) {
  SmfMaximizer m;
  m.gamma = gamma;
  m.beta = 1;
  m.run = [&ground](QueryCountedOracle& oracle, const FairnessMatroid& fm, double stop_at) {
    FairnessIndependence independence(ground, fm);
    return standard_greedy_matroid(oracle, ground, independence, stop_at);
  };
  return m;
}

int convert_rand_repetitions(double gamma, double beta, double eps,
                             double delta) {
  if (!(eps > 0.0) || !(gamma - eps > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "need 0 < gamma - eps");
  }
  if (!(beta > gamma)) throw Error(ErrorCode::kInvalidParameter, "need beta > gamma");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "delta must lie in (0, 1)");
  }
  const double ratio = (beta - gamma + eps) / (beta - gamma);
  const double r = std::log(1.0 / delta) / std::log(ratio);
  return std::max(1, static_cast<int>(std::ceil(r - kSnap)));
}

CoverResult convert_rand(const SmpMaximizer& maximizer,
                         QueryCountedOracle& oracle,
                         const PartitionedGroundSet& ground,
                         const PartitionProportions& p, double tau, double eps,
                         double delta, double alpha, const SeededRng& rng,
                         bool early_stop) {
  RequireAlpha(alpha);
  RequireTau(tau);
  const int reps = convert_rand_repetitions(maximizer.gamma, maximizer.beta, eps, delta);
  const double threshold = (maximizer.gamma - eps) * tau;
  const double stop_at = early_stop ? threshold : kNoStop;
  const std::int64_t start = oracle.queries();
  double g = 1.0 + alpha;
  if (tau == 0.0) {
    CoverResult out = EmptyCover(oracle, ConstraintFamily::kPartition,
                                 maximizer.beta * g, start);
    return out;
  }
  CheckAttainable(oracle, ground, tau);
  const double cap = ground.size() / p.min();

  for (int guess = 0;; ++guess) {
    const SeededRng guess_rng = rng.Fork(static_cast<std::uint64_t>(guess));
    std::optional<MaxResult> winner;
    for (int first = 0; first < reps && !winner; first += kRepetitionChunk) {
      const int count = std::min(kRepetitionChunk, reps - first);
      std::vector<std::optional<MaxResult>> results(static_cast<size_t>(count));
      std::vector<std::int64_t> spent(static_cast<size_t>(count), 0);
      std::vector<std::exception_ptr> failures(static_cast<size_t>(count));
      const bool parallel = kernels::GetPolicy() != kernels::Policy::kSerial;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
      for (int i = 0; i < count; ++i) {
        const auto slot = static_cast<size_t>(i);
        QueryCountedOracle local(oracle.objective());
        SeededRng stream = guess_rng.Fork(static_cast<std::uint64_t>(first + i));
        try {
          results[slot] = maximizer.run(local, g, stream, stop_at);
        } catch (const Error& e) {
          if (!IsDegenerate(e)) failures[slot] = std::current_exception();
        } catch (...) {
          failures[slot] = std::current_exception();
        }
        spent[slot] = local.queries();
      }
      for (int i = 0; i < count; ++i) {
        const auto slot = static_cast<size_t>(i);
        if (failures[slot]) std::rethrow_exception(failures[slot]);
        oracle.Charge(spent[slot]);
        if (!winner && results[slot] && results[slot]->f_value >= threshold) {
          winner = std::move(results[slot]);
        }
      }
    }
    if (winner) {
      CoverResult out;
      out.S = std::move(winner->S);
      out.f_value = winner->f_value;
      out.v_S = maximizer.beta * g;
      out.guesses_tried = guess + 1;
      out.family = ConstraintFamily::kPartition;
      out.certified = partition_feasible(out.S, ground, p, out.v_S);
      out.threshold = threshold;
      out.queries = oracle.queries() - start;
      return out;
    }
    if (g >= cap - kSnap) {
      throw Error(ErrorCode::kInfeasibleThreshold,
                  "no guess up to n / min p_j reached the threshold");
    }
    g *= 1.0 + alpha;
  }
}

CoverResult convert_knapsack(const SmkpMaximizer& maximizer,
                             QueryCountedOracle& oracle,
                             const PartitionedGroundSet& ground,
                             const CostVector& costs,
                             const PartitionProportions& p, double tau,
                             double alpha, bool early_stop) {
  RequireAlpha(alpha);
  RequireTau(tau);
  const double threshold = maximizer.gamma * tau;
  const double stop_at = early_stop ? threshold : kNoStop;
  const std::int64_t start = oracle.queries();
  double v = (1.0 + alpha) * costs.min();
  if (tau == 0.0) {
    return EmptyCover(oracle, ConstraintFamily::kKnapsackPartition,
                      maximizer.beta * v, start);
  }
  CheckAttainable(oracle, ground, tau);
  const double cap = costs.Sum(ground.all()) / p.min();

  for (int guess = 0;; ++guess) {
    std::optional<MaxResult> res;
    try {
      res = maximizer.run(oracle, v, stop_at);
    } catch (const Error& e) {
      if (!IsDegenerate(e)) throw;
    }
    if (res && res->f_value >= threshold) {
      CoverResult out;
      out.S = std::move(res->S);
      out.f_value = res->f_value;
      out.v_S = maximizer.beta * v;
      out.guesses_tried = guess + 1;
      out.family = ConstraintFamily::kKnapsackPartition;
      out.certified = knapsack_partition_feasible(out.S, ground, costs, p, out.v_S);
      out.threshold = threshold;
      out.queries = oracle.queries() - start;
      return out;
    }
    if (v >= cap - kSnap) {
      throw Error(ErrorCode::kInfeasibleThreshold,
                  "no guess up to c(U) / min p_j reached the threshold");
    }
    v *= 1.0 + alpha;
  }
}

std::vector<int> fair_guess_grid(double alpha, int limit) {
  RequireAlpha(alpha);
  std::vector<int> grid;
  for (int k = 1; k <= limit;) {
    grid.push_back(k);
    const int next = static_cast<int>(std::ceil((1.0 + alpha) * k - kSnap));
    k = std::max(k + 1, next);
  }
  // The last step may jump past the limit; n itself is always worth a try.
  if (limit >= 1 && grid.back() != limit) grid.push_back(limit);
  return grid;
}

CoverResult convert_fair(const SmfMaximizer& maximizer,
                         QueryCountedOracle& oracle,
                         const PartitionedGroundSet& ground,
                         std::span<const double> p_lo,
                         std::span<const double> p_hi, double tau,
                         double alpha, bool early_stop) {
  RequireAlpha(alpha);
  RequireTau(tau);
  if (static_cast<int>(p_lo.size()) != ground.num_groups() ||
      static_cast<int>(p_hi.size()) != ground.num_groups()) {
    throw Error(ErrorCode::kInvalidParameter, "need one proportion pair per group");
  }
  const double threshold = maximizer.gamma * tau;
  const double stop_at = early_stop ? threshold : kNoStop;
  const std::int64_t start = oracle.queries();
  if (tau == 0.0) {
    // Validates the proportions through the matroid builder.
    fairness_from_proportions(p_lo, p_hi, 1);
    return EmptyCover(oracle, ConstraintFamily::kFairnessExtension, 0.0, start);
  }
  CheckAttainable(oracle, ground, tau);

  int tried = 0;
  for (int k : fair_guess_grid(alpha, ground.size())) {
    ++tried;
    const FairnessMatroid m = fairness_from_proportions(p_lo, p_hi, k);
    MaxResult res = maximizer.run(oracle, m, stop_at);
    if (res.f_value >= threshold) {
      CoverResult out;
      out.S = std::move(res.S);
      out.f_value = res.f_value;
      out.v_S = static_cast<double>(out.S.size());
      out.guesses_tried = tried;
      out.family = ConstraintFamily::kFairnessExtension;
      out.certified = fairness_beta_member(out.S, ground, m, maximizer.beta);
      out.threshold = threshold;
      out.queries = oracle.queries() - start;
      return out;
    }
  }
  throw Error(ErrorCode::kInfeasibleThreshold, "no cardinality guess up to n reached the threshold");
}

CoverResult greedy_knapsack_cover(QueryCountedOracle& oracle,
                                  const PartitionedGroundSet& ground,
                                  const CostVector& costs,
                                  const PartitionProportions& p, double tau,
                                  double eps) {
  RequireTau(tau);
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "eps must lie in [0, 1)");
  }
  const std::int64_t start = oracle.queries();
  CheckAttainable(oracle, ground, tau);
  const double threshold = (1.0 - eps) * tau;
  Session session(oracle);
  while (session.value() < threshold) {
    std::vector<Element> pool;
    for (Element x : ground.all()) {
      if (!session.contains(x)) pool.push_back(x);
    }
    if (pool.empty()) {
      throw Error(ErrorCode::kInfeasibleThreshold, "ground set exhausted below the threshold");
    }
    std::vector<double> density = session.Gains(pool);
    for (size_t t = 0; t < pool.size(); ++t) density[t] /= costs[pool[t]];
    session.Add(pool[*kernels::ArgmaxPosition(density)]);
  }
  CoverResult out;
  out.S.assign(session.members().begin(), session.members().end());
  out.f_value = oracle.Evaluate(out.S);
  const std::vector<double> used = ground.GroupCosts(out.S, costs.values());
  for (int j = 0; j < ground.num_groups(); ++j) {
    out.v_S = std::max(out.v_S, used[static_cast<size_t>(j)] / p[j]);
  }
  out.guesses_tried = 1;
  out.family = ConstraintFamily::kKnapsackPartition;
  out.certified = knapsack_partition_feasible(out.S, ground, costs, p, out.v_S);
  out.threshold = threshold;
  out.queries = oracle.queries() - start;
  return out;
}

}  // namespace subcover
