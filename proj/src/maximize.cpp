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

#include "subcover/maximize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "subcover/errors.hpp"
#include "subcover/kernels.hpp"

namespace subcover {
namespace {

constexpr double kSnap = 1e-9;

int FloorSnap(double x) { return static_cast<int>(std::floor(x + kSnap)); }
int CeilSnap(double x) { return static_cast<int>(std::ceil(x - kSnap)); }

void RequireEps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "eps must lie in (0, 1)");
  }
}

void ValidateCaps(const PartitionedGroundSet& ground, std::span<const int> caps) {
  if (static_cast<int>(caps.size()) != ground.num_groups()) {
    throw Error(ErrorCode::kInvalidCaps, "need one cap per group");
  }
  for (int j = 0; j < ground.num_groups(); ++j) {
    const int k = caps[static_cast<size_t>(j)];
    if (k < 1 || k > static_cast<int>(ground.members(j).size())) {
      throw Error(ErrorCode::kInvalidCaps,
                  "cap for group " + std::to_string(j) + " must lie in [1, |U_j|]");
    }
  }
}

std::vector<Element> Outside(const Session& session, std::span<const Element> from) {
  std::vector<Element> pool;
  pool.reserve(from.size());
  for (Element x : from) {
    if (!session.contains(x)) pool.push_back(x);
  }
  return pool;
}

// Adds the argmax-gain element of `pool`; false when the pool is empty.
bool AddBest(Session& session, std::span<const Element> pool) {
  if (pool.empty()) return false;
  const std::vector<double> gains = session.Gains(pool);
  session.Add(pool[*kernels::ArgmaxPosition(gains)]);
  return true;
}

// Uniform draw from the top-m candidates padded with zero-gain dummies.
// Negative-gain elements rank below dummies and are never drawn.
void AddSampled(Session& session, std::span<const Element> pool, int m,
                SeededRng& rng) {
  if (m <= 0) return;
  const std::vector<double> gains = session.Gains(pool);
  const std::vector<size_t> top =
      kernels::TopNonNegative(gains, static_cast<size_t>(m));
  const auto pick = rng.UniformIndex(static_cast<std::uint64_t>(m));
  if (pick < top.size()) session.Add(pool[top[pick]]);
}

MaxResult Finish(QueryCountedOracle& oracle, const Session& session,
                 const PartitionedGroundSet& ground, std::int64_t start,
                 const CostVector* costs = nullptr) {
  MaxResult out;
  out.S.assign(session.members().begin(), session.members().end());
  out.f_value = oracle.Evaluate(out.S);
  out.queries = oracle.queries() - start;
  out.per_group_counts = ground.GroupCounts(out.S);
  out.per_group_costs =
      ground.GroupCosts(out.S, costs ? std::span<const double>(costs->values())
                                     : std::span<const double>());
  return out;
}

void RunStandardGreedy(Session& session, const PartitionedGroundSet& ground,
                       IndependenceOracle& independence, double stop_at = kNoStop) {
  while (session.value() < stop_at) {
    std::vector<Element> pool;
    for (Element x : ground.all()) {
      if (!session.contains(x) && independence.CanAdd(x)) pool.push_back(x);
    }
    if (pool.empty()) return;
    const std::vector<double> gains = session.Gains(pool);
    const Element best = pool[*kernels::ArgmaxPosition(gains)];
    session.Add(best);
    independence.Add(best);
  }
}

}  // namespace

BlockSchedule block_schedule_mono(std::span<const int> caps) {
  BlockSchedule s;
  const int k_min = *std::min_element(caps.begin(), caps.end());
  int root = static_cast<int>(std::sqrt(static_cast<double>(k_min)));
  while ((root + 1) * (root + 1) <= k_min) ++root;
  while (root * root > k_min) --root;
  s.phi = root - 1;
  if (s.phi >= 1) {
    for (int k : caps) s.r.push_back(k / s.phi);
  }
  return s;
}

BlockSchedule block_schedule_gcd(std::span<const int> caps) {
  BlockSchedule s;
  s.phi = 0;
  for (int k : caps) s.phi = std::gcd(s.phi, k);
  for (int k : caps) s.r.push_back(s.phi > 0 ? k / s.phi : 0);
  return s;
}

int nonmono_bi_rounds(double eps) { return CeilSnap(2.0 / eps); }
int nonmono_bi_steps(double pv) { return std::max(0, FloorSnap(pv)); }
int nonmono_bi_candidates(double pv, double eps) { return CeilSnap(2.0 * pv / eps); }
int halving_rounds(double eps) {
  return std::max(1, CeilSnap(std::log(1.0 / eps) / std::log(2.0)));
}

MaxResult nonmono_bi(QueryCountedOracle& oracle,
                     const PartitionedGroundSet& ground,
                     const PartitionProportions& p, double v, double eps,
                     SeededRng& rng, double stop_at) {
  if (!(eps > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "eps must be positive");
  }
  if (!(v > 0.0)) throw Error(ErrorCode::kInvalidParameter, "v must be positive");
  const int groups = ground.num_groups();
  std::vector<int> steps(static_cast<size_t>(groups));
  std::vector<int> cands(static_cast<size_t>(groups));
  bool any = false;
  for (int j = 0; j < groups; ++j) {
    steps[static_cast<size_t>(j)] = nonmono_bi_steps(p[j] * v);
    cands[static_cast<size_t>(j)] = nonmono_bi_candidates(p[j] * v, eps);
    any = any || steps[static_cast<size_t>(j)] > 0;
  }
  if (!any) {
    throw Error(ErrorCode::kDegenerateBudget, "every p_j * v is below 1");
  }

  const std::int64_t start = oracle.queries();
  Session session(oracle);
  const int rounds = nonmono_bi_rounds(eps);
  for (int i = 0; i < rounds; ++i) {
    for (int j = 0; j < groups; ++j) {
      for (int l = 0; l < steps[static_cast<size_t>(j)]; ++l) {
        if (session.value() >= stop_at) return Finish(oracle, session, ground, start);
        const std::vector<Element> pool = Outside(session, ground.members(j));
        AddSampled(session, pool, cands[static_cast<size_t>(j)], rng);
      }
    }
  }
  return Finish(oracle, session, ground, start);
}

MaxResult greedy_knapsack_bi(QueryCountedOracle& oracle,
                             const PartitionedGroundSet& ground,
                             const CostVector& costs,
                             const PartitionProportions& p, double v,
                             double eps, double stop_at) {
  RequireEps(eps);
  if (!(v > 0.0)) throw Error(ErrorCode::kInvalidParameter, "v must be positive");
  const std::int64_t start = oracle.queries();
  Session session(oracle);
  std::vector<BlockTrace> trace;
  const int rounds = halving_rounds(eps);
  bool stopped = false;
  for (int i = 0; i < rounds && !stopped; ++i) {
    for (int j = 0; j < ground.num_groups() && !stopped; ++j) {
      const double budget = p[j] * v;
      BlockTrace block{i, j, 0.0, false};
      while (true) {
        std::vector<Element> pool;
        for (Element x : ground.members(j)) {
          if (!session.contains(x) && costs[x] <= budget) pool.push_back(x);
        }
        if (pool.empty()) {
          block.exhausted = true;
          break;
        }
        std::vector<double> density = session.Gains(pool);
        for (size_t t = 0; t < pool.size(); ++t) density[t] /= costs[pool[t]];
        const Element best = pool[*kernels::ArgmaxPosition(density)];
        session.Add(best);
        block.added_cost += costs[best];
        if (session.value() >= stop_at) {
          stopped = true;
          break;
        }
        if (block.added_cost >= budget) break;
      }
      trace.push_back(block);
    }
  }
  MaxResult out = Finish(oracle, session, ground, start, &costs);
  out.trace = std::move(trace);
  out.pool_exhausted = std::any_of(out.trace.begin(), out.trace.end(),
                                   [](const BlockTrace& b) { return b.exhausted; });
  return out;
}

MaxResult block_fair_bi(QueryCountedOracle& oracle,
                        const PartitionedGroundSet& ground,
                        const FairnessMatroid& m, double eps,
                        double stop_at) {
  RequireEps(eps);
  m.Validate();
  if (static_cast<int>(m.l.size()) != ground.num_groups()) {
    throw Error(ErrorCode::kInvalidParameter, "matroid group count mismatch");
  }
  const std::int64_t start = oracle.queries();
  Session session(oracle);
  const int rounds = halving_rounds(eps);
  for (int i = 0; i < rounds && session.value() < stop_at; ++i) {
    FairnessIndependence block(ground, m);
    while (session.value() < stop_at) {
      std::vector<Element> pool;
      for (Element x : ground.all()) {
        if (!session.contains(x) && block.CanAdd(x)) pool.push_back(x);
      }
      if (pool.empty()) break;
      const std::vector<double> gains = session.Gains(pool);
      const Element best = pool[*kernels::ArgmaxPosition(gains)];
      session.Add(best);
      block.Add(best);
    }
  }
  return Finish(oracle, session, ground, start);
}

void block_greedy(Session& session, const PartitionedGroundSet& ground,
                  int phi, const BlockSubroutine& subroutine) {
  for (int i = 0; i < phi; ++i) {
    for (int j = 0; j < ground.num_groups(); ++j) subroutine(session, i, j);
  }
}

namespace {

MaxResult RunMonoSchedule(QueryCountedOracle& oracle,
                          const PartitionedGroundSet& ground,
                          const BlockSchedule& schedule) {
  const std::int64_t start = oracle.queries();
  Session session(oracle);
  block_greedy(session, ground, schedule.phi, [&](Session& s, int, int j) {
    for (int l = 0; l < schedule.r[static_cast<size_t>(j)]; ++l) {
      if (!AddBest(s, Outside(s, ground.members(j)))) break;
    }
  });
  return Finish(oracle, session, ground, start);
}

}  // namespace

MaxResult block_greedy_mono(QueryCountedOracle& oracle,
                            const PartitionedGroundSet& ground,
                            std::span<const int> caps) {
  ValidateCaps(ground, caps);
  const BlockSchedule schedule = block_schedule_mono(caps);
  if (schedule.phi < 1) {
    PartitionCapsIndependence independence(ground, {caps.begin(), caps.end()});
    return standard_greedy_matroid(oracle, ground, independence);
  }
  return RunMonoSchedule(oracle, ground, schedule);
}

MaxResult block_greedy_gcd(QueryCountedOracle& oracle,
                           const PartitionedGroundSet& ground,
                           std::span<const int> caps) {
  ValidateCaps(ground, caps);
  return RunMonoSchedule(oracle, ground, block_schedule_gcd(caps));
}

MaxResult block_greedy_nonmono(QueryCountedOracle& oracle,
                               const PartitionedGroundSet& ground,
                               std::span<const int> caps, SeededRng& rng) {
  ValidateCaps(ground, caps);
  BlockSchedule schedule = block_schedule_mono(caps);
  if (schedule.phi < 1) {
    // One round of random greedy per group with k_j candidates.
    schedule.phi = 1;
    schedule.r.assign(caps.begin(), caps.end());
  }
  const std::int64_t start = oracle.queries();
  Session session(oracle);
  block_greedy(session, ground, schedule.phi, [&](Session& s, int, int j) {
    const int r = schedule.r[static_cast<size_t>(j)];
    for (int l = 0; l < r; ++l) {
      AddSampled(s, Outside(s, ground.members(j)), r * schedule.phi, rng);
    }
  });
  return Finish(oracle, session, ground, start);
}

MaxResult greedy_augment(QueryCountedOracle& oracle,
                         const PartitionedGroundSet& ground,
                         std::span<const int> caps,
                         std::span<const Element> s0) {
  if (static_cast<int>(caps.size()) != ground.num_groups()) {
    throw Error(ErrorCode::kInvalidCaps, "need one cap per group");
  }
  ElementSet sorted(s0.begin(), s0.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= ground.size()))) {
    throw Error(ErrorCode::kInvalidInput, "initial set has invalid elements");
  }
  const std::vector<int> counts = ground.GroupCounts(s0);
  PartitionCapsIndependence independence(ground, {caps.begin(), caps.end()});
  for (int j = 0; j < ground.num_groups(); ++j) {
    if (counts[static_cast<size_t>(j)] > caps[static_cast<size_t>(j)]) {
      throw Error(ErrorCode::kInvalidInput, "initial set violates the caps");
    }
  }
  for (Element x : s0) independence.Add(x);
  const std::int64_t start = oracle.queries();
  Session session(oracle, s0);
  RunStandardGreedy(session, ground, independence);
  return Finish(oracle, session, ground, start);
}

MaxResult standard_greedy_matroid(QueryCountedOracle& oracle,
                                  const PartitionedGroundSet& ground,
                                  IndependenceOracle& independence,
                                  double stop_at) {
  const std::int64_t start = oracle.queries();
  Session session(oracle);
  RunStandardGreedy(session, ground, independence, stop_at);
  return Finish(oracle, session, ground, start);
}

MaxResult random_greedy_cardinality(QueryCountedOracle& oracle,
                                    const PartitionedGroundSet& ground,
                                    int kappa, SeededRng& rng,
                                    double stop_at) {
  if (kappa < 0 || kappa > ground.size()) {
    throw Error(ErrorCode::kInvalidParameter, "kappa must lie in [0, n]");
  }
  const std::int64_t start = oracle.queries();
  Session session(oracle);
  for (int step = 0; step < kappa && session.value() < stop_at; ++step) {
    AddSampled(session, Outside(session, ground.all()), kappa, rng);
  }
  return Finish(oracle, session, ground, start);
}

MaxResult greedy_density_knapsack(QueryCountedOracle& oracle,
                                  const PartitionedGroundSet& ground,
                                  const CostVector& costs,
                                  const PartitionProportions& p, double v,
                                  double stop_at) {
  const std::int64_t start = oracle.queries();
  Session session(oracle);
  KnapsackPartitionIndependence independence(ground, costs, p, v);
  while (session.value() < stop_at) {
    std::vector<Element> pool;
    for (Element x : ground.all()) {
      if (!session.contains(x) && independence.CanAdd(x)) pool.push_back(x);
    }
    if (pool.empty()) break;
    std::vector<double> density = session.Gains(pool);
    for (size_t t = 0; t < pool.size(); ++t) density[t] /= costs[pool[t]];
    const Element best = pool[*kernels::ArgmaxPosition(density)];
    session.Add(best);
    independence.Add(best);
  }
  return Finish(oracle, session, ground, start, &costs);
}

}  // namespace subcover
