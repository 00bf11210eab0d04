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

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "subcover/constraints.hpp"
#include "subcover/cover.hpp"
#include "subcover/errors.hpp"
#include "subcover/instances.hpp"
#include "test_util.hpp"

using namespace subcover;

namespace {

// max_j c(S ∩ U_j) / p_j, with unit costs when c is empty.
double Budget(const InstanceFile& inst, const ElementSet& s, const std::vector<double>& p,
              const std::vector<double>& c = {}) {
  std::vector<double> spent(p.size(), 0.0);
  for (Element x : s) {
    spent[static_cast<size_t>(inst.groups[static_cast<size_t>(x)])] +=
        c.empty() ? 1.0 : c[static_cast<size_t>(x)];
  }
  double v = 0.0;
  for (size_t j = 0; j < p.size(); ++j) v = std::max(v, spent[j] / p[j]);
  return v;
}

double MinBudget(const InstanceFile& inst, const std::vector<double>& p, double tau,
                 const std::vector<double>& c = {}) {
  return testutil::ScanMasks(
             inst.n, [&](const ElementSet& s) { return testutil::Naive(inst, s) >= tau - 1e-9; },
             [&](const ElementSet& s) { return Budget(inst, s, p, c); }, false)
      .value;
}

double FullValue(const InstanceFile& inst) {
  return testutil::Naive(inst, testutil::FromMask((std::uint64_t{1} << inst.n) - 1, inst.n));
}

}  // namespace

TEST_SUITE("cover") {

TEST_CASE("repetition count formula") {
  CHECK(convert_rand_repetitions(1.0 / std::exp(1.0), 20.0, 0.05, 0.1) == 906);
  CHECK(convert_rand_repetitions(0.5, 1.0, 0.25, 0.5) == 2);
}

TEST_CASE("fair guess grid") {
  CHECK(fair_guess_grid(0.2, 10) == std::vector<int>{1, 2, 3, 4, 5, 6, 8, 10});
  CHECK(fair_guess_grid(0.2, 7) == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK(fair_guess_grid(1.0, 5) == std::vector<int>{1, 2, 4, 5});
}

TEST_CASE("knapsack guesses double from (1 + alpha) c_min") {
  const InstanceFile inst = testutil::RandomCover(4, 6, 2, 8, 3);
  const auto f = make_objective(inst);
  const auto g = make_ground(inst);
  std::vector<double> costs(6, 2.0);
  costs[3] = 0.5;
  std::vector<double> seen;
  SmkpMaximizer stub;
  stub.gamma = 1.0;
  stub.beta = 1.0;
  stub.run = [&](QueryCountedOracle& o, double v, double) {
    seen.push_back(v);
    MaxResult r;
    if (v >= 8.0) r.S.assign(g.all().begin(), g.all().end());
    r.f_value = o.Evaluate(r.S);
    return r;
  };
  QueryCountedOracle oracle(*f);
  const CoverResult res = convert_knapsack(stub, oracle, g, CostVector(costs),
                                           PartitionProportions({0.5, 0.5}), FullValue(inst), 1.0);
  CHECK(seen == std::vector<double>{1.0, 2.0, 4.0, 8.0});
  CHECK(res.guesses_tried == 4);
  CHECK(res.v_S == 8.0);
}

TEST_CASE("zero threshold returns the empty set without running the maximizer") {
  const InstanceFile inst = testutil::RandomGraph(1, 8, 0.5, 2);
  const auto f = make_objective(inst);
  const auto g = make_ground(inst);
  const PartitionProportions p({0.5, 0.5});
  int calls = 0;
  SmpMaximizer mx = nonmono_bi_maximizer(g, p, 0.1);
  auto inner = mx.run;
  mx.run = [&](QueryCountedOracle& o, double v, SeededRng& r, double stop_at) {
    ++calls;
    return inner(o, v, r, stop_at);
  };
  QueryCountedOracle oracle(*f);
  const CoverResult res = convert_rand(mx, oracle, g, p, 0.0, 0.05, 0.1, 0.2, SeededRng(3));
  CHECK(res.S.empty());
  CHECK(calls == 0);
  CHECK(res.f_value == 0.0);
}

TEST_CASE("thresholds above f(U) are rejected for monotone objectives") {
  const InstanceFile inst = testutil::RandomCover(2, 8, 2, 10, 3);
  const auto f = make_objective(inst);
  const auto g = make_ground(inst);
  const PartitionProportions p({0.5, 0.5});
  QueryCountedOracle oracle(*f);
  try {
    convert_knapsack(greedy_knapsack_bi_maximizer(g, CostVector::Unit(8), p, 0.1), oracle, g,
                     CostVector::Unit(8), p, FullValue(inst) + 1.0, 0.2);
    FAIL("expected infeasible-threshold");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasibleThreshold);
  }
}

TEST_CASE("convert_rand is certified, sound and within its budget bound") {
  const double eps = 0.1, alpha = 0.2, delta = 0.1;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const InstanceFile inst = testutil::RandomGraph(seed + 10, 10, 0.4, 2);
    const auto f = make_objective(inst);
    const auto g = make_ground(inst);
    const std::vector<double> pv = {0.5, 0.5};
    const PartitionProportions p(pv);
    const double best = testutil::ScanMasks(
                            inst.n, [](const ElementSet&) { return true; },
                            [&](const ElementSet& s) { return testutil::Naive(inst, s); }, true)
                            .value;
    const double tau = 0.6 * best;
    const double v_opt = MinBudget(inst, pv, tau);
    const SmpMaximizer mx = nonmono_bi_maximizer(g, p, eps);
    QueryCountedOracle oracle(*f);
    const CoverResult res = convert_rand(mx, oracle, g, p, tau, eps, delta, alpha, SeededRng(seed));
    CHECK(res.certified);
    CHECK(partition_feasible(res.S, g, p, res.v_S));
    CHECK(res.f_value >= res.threshold);
    CHECK(res.f_value >= (mx.gamma - eps) * tau - 1e-9);
    CHECK(res.v_S <= mx.beta * (1 + alpha) * v_opt + 1e-9);
    CHECK(res.queries == oracle.queries());
  }
}

TEST_CASE("convert_rand is deterministic in its seed") {
  const InstanceFile inst = testutil::RandomGraph(99, 12, 0.4, 3);
  const auto f = make_objective(inst);
  const auto g = make_ground(inst);
  const PartitionProportions p({0.3, 0.3, 0.4});
  const SmpMaximizer mx = nonmono_bi_maximizer(g, p, 0.1);
  auto once = [&] {
    QueryCountedOracle oracle(*f);
    return convert_rand(mx, oracle, g, p, 10.0, 0.1, 0.1, 0.2, SeededRng(17));
  };
  const CoverResult a = once(), b = once();
  CHECK(a.S == b.S);
  CHECK(a.v_S == b.v_S);
  CHECK(a.queries == b.queries);
  CHECK(a.guesses_tried == b.guesses_tried);
}

TEST_CASE("convert_knapsack with greedy_knapsack_bi stays within its bound") {
  const double eps = 0.1, alpha = 0.2;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const InstanceFile inst = testutil::RandomCover(seed + 40, 10, 2, 14, 4);
    const auto f = make_objective(inst);
    const auto g = make_ground(inst);
    const std::vector<double> pv = {0.4, 0.6};
    const PartitionProportions p(pv);
    const std::vector<double> c = testutil::RandomCosts(seed, inst.n, 0.5, 2.0);
    const CostVector costs(c);
    const double tau = 0.8 * FullValue(inst);
    const double v_opt = MinBudget(inst, pv, tau, c);
    const SmkpMaximizer mx = greedy_knapsack_bi_maximizer(g, costs, p, eps);
    QueryCountedOracle oracle(*f);
    const CoverResult res = convert_knapsack(mx, oracle, g, costs, p, tau, alpha);
    CHECK(res.certified);
    CHECK(knapsack_partition_feasible(res.S, g, costs, p, res.v_S));
    CHECK(res.f_value >= (1 - eps) * tau - 1e-9);
    CHECK(res.v_S <= mx.beta * (1 + alpha) * v_opt + 1e-9);
  }
}

TEST_CASE("convert_knapsack reaches tau = f(U)") {
  const InstanceFile inst = testutil::RandomCover(61, 9, 2, 12, 3);
  const auto f = make_objective(inst);
  const auto g = make_ground(inst);
  const PartitionProportions p({0.5, 0.5});
  const CostVector costs(testutil::RandomCosts(61, 9, 0.5, 2.0));
  QueryCountedOracle oracle(*f);
  const double tau = FullValue(inst);
  const CoverResult res = convert_knapsack(greedy_knapsack_bi_maximizer(g, costs, p, 0.1), oracle, g,
                                           costs, p, tau, 0.2);
  CHECK(res.f_value >= 0.9 * tau - 1e-9);
}

TEST_CASE("convert_fair stops at (1 - eps) tau and certifies beta membership") {
  const double eps = 0.1, alpha = 0.2;
  const std::vector<double> lo = {0.3, 0.3}, hi = {0.7, 0.7};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const InstanceFile inst = testutil::RandomCover(seed + 70, 10, 2, 14, 4);
    const auto f = make_objective(inst);
    const auto g = make_ground(inst);
    const double tau = 0.7 * FullValue(inst);
    const auto opt = testutil::ScanMasks(
        inst.n,
        [&](const ElementSet& s) {
          if (testutil::Naive(inst, s) < tau - 1e-9) return false;
          const auto counts = testutil::Counts(inst, s, 2);
          const double size = static_cast<double>(s.size());
          for (int j = 0; j < 2; ++j) {
            const double cj = counts[static_cast<size_t>(j)];
            if (cj < lo[static_cast<size_t>(j)] * size - 1e-9 || cj > hi[static_cast<size_t>(j)] * size + 1e-9) return false;
          }
          return true;
        },
        [](const ElementSet& s) { return static_cast<double>(s.size()); }, false);
    const SmfMaximizer mx = block_fair_bi_maximizer(g, eps);
    QueryCountedOracle oracle(*f);
    const CoverResult res = convert_fair(mx, oracle, g, lo, hi, tau, alpha);
    CHECK(mx.beta == 4);
    CHECK(res.f_value >= 0.9 * tau - 1e-9);
    CHECK(res.certified);
    CHECK(res.v_S == static_cast<double>(res.S.size()));
    if (opt.found) CHECK(res.v_S <= mx.beta * (1 + alpha) * opt.value + 1e-9);
  }
}

TEST_CASE("greedy_knapsack_cover reports its measured budget") {
  const InstanceFile inst = testutil::RandomCover(81, 12, 3, 16, 4);
  const auto f = make_objective(inst);
  const auto g = make_ground(inst);
  const std::vector<double> pv = {0.2, 0.3, 0.5};
  const std::vector<double> c = testutil::RandomCosts(81, 12, 0.001, 10.0);
  QueryCountedOracle oracle(*f);
  const double tau = FullValue(inst);
  const CoverResult res =
      greedy_knapsack_cover(oracle, g, CostVector(c), PartitionProportions(pv), tau, 0.05);
  CHECK(res.f_value >= 0.95 * tau - 1e-9);
  CHECK(std::abs(res.v_S - Budget(inst, res.S, pv, c)) < 1e-9);
}

}  // TEST_SUITE
