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

#include <vector>

#include "doctest.h"
#include "subcover/constraints.hpp"
#include "subcover/errors.hpp"
#include "test_util.hpp"

using namespace subcover;

namespace {

// Groups {0,1,2} and {3,4,5}.
PartitionedGroundSet TwoByThree() { return PartitionedGroundSet({0, 0, 0, 1, 1, 1}); }

}  // namespace

TEST_SUITE("constraints") {

TEST_CASE("proportions must be positive and sum to one") {
  CHECK_NOTHROW(PartitionProportions({0.25, 0.75}));
  CHECK_THROWS_AS(PartitionProportions({0.5, 0.6}), Error);
  CHECK_THROWS_AS(PartitionProportions({1.0, 0.0}), Error);
  CHECK_THROWS_AS(CostVector({1.0, -1.0}), Error);
}

TEST_CASE("partition feasibility examples") {
  const auto g = TwoByThree();
  const PartitionProportions half({0.5, 0.5});
  CHECK(partition_feasible({}, g, half, 0.0));
  const std::vector<Element> s = {0, 1, 3, 4, 5};
  CHECK(partition_feasible(s, g, half, 6.0));
  CHECK_FALSE(partition_feasible(s, g, half, 5.0));
  const std::vector<Element> one = {0};
  CHECK(partition_feasible(one, g, PartitionProportions({0.2, 0.8}), 5.0));
}

TEST_CASE("knapsack partition feasibility examples") {
  const auto g = TwoByThree();
  const PartitionProportions half({0.5, 0.5});
  const CostVector c({1.0, 5.0, 5.0, 2.0, 5.0, 5.0});
  CHECK(knapsack_partition_feasible({}, g, c, half, 0.0));
  const std::vector<Element> s = {0, 3};
  CHECK(knapsack_partition_feasible(s, g, c, half, 4.0));
  CHECK_FALSE(knapsack_partition_feasible(s, g, c, half, 3.9));
}

TEST_CASE("unit-cost knapsack predicate equals the partition predicate") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const InstanceFile inst = testutil::RandomCover(seed, 10, 2, 5, 2);
    const PartitionedGroundSet g(inst.groups);
    const PartitionProportions p({0.3, 0.7});
    const CostVector unit = CostVector::Unit(10);
    const double v = 1.0 + static_cast<double>(seed % 7);
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
      const ElementSet s = testutil::FromMask(mask, 10);
      if (partition_feasible(s, g, p, v) != knapsack_partition_feasible(s, g, unit, p, v)) {
        FAIL("predicates disagree, seed " << seed << " mask " << mask);
      }
    }
  }
}

TEST_CASE("partition feasibility is monotone in v") {
  const InstanceFile inst = testutil::RandomCover(3, 9, 3, 5, 2);
  const PartitionedGroundSet g(inst.groups);
  const PartitionProportions p({0.2, 0.3, 0.5});
  for (std::uint64_t mask = 0; mask < 512; ++mask) {
    const ElementSet s = testutil::FromMask(mask, 9);
    bool was = false;
    for (double v = 0; v <= 30; v += 0.5) {
      const bool now = partition_feasible(s, g, p, v);
      if (was && !now) FAIL("feasibility lost when v grew");
      was = now;
    }
  }
}

TEST_CASE("fairness matroid membership examples") {
  const auto g = TwoByThree();
  FairnessMatroid m{{0, 0}, {1, 1}, 2};
  CHECK(fairness_independent(std::vector<Element>{0}, g, m));
  FairnessMatroid tight{{1, 1}, {2, 2}, 2};
  CHECK_FALSE(fairness_independent(std::vector<Element>{0, 1}, g, tight));
  CHECK(fairness_independent({}, g, tight));
  FairnessMatroid unit{{1, 1}, {1, 1}, 2};
  CHECK(fairness_beta_member(std::vector<Element>{0, 1}, g, unit, 2));
  CHECK_FALSE(fairness_beta_member(std::vector<Element>{0, 1}, g, unit, 1));
}

TEST_CASE("beta membership extends independence") {
  const InstanceFile inst = testutil::RandomCover(8, 10, 2, 5, 2);
  const PartitionedGroundSet g(inst.groups);
  const FairnessMatroid m{{1, 0}, {3, 2}, 4};
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const ElementSet s = testutil::FromMask(mask, 10);
    const bool ind = fairness_independent(s, g, m);
    if (ind != fairness_beta_member(s, g, m, 1)) FAIL("beta = 1 differs");
    if (ind && !(fairness_beta_member(s, g, m, 2) && fairness_beta_member(s, g, m, 3))) {
      FAIL("independent set left M_beta");
    }
  }
}

TEST_CASE("fairness matroid is downward closed and satisfies exchange") {
  const InstanceFile inst = testutil::RandomCover(9, 8, 3, 5, 2);
  const PartitionedGroundSet g(inst.groups);
  const FairnessMatroid m{{1, 1, 0}, {2, 3, 2}, 4};
  const int n = 8;
  std::vector<char> ind(256);
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    ind[mask] = fairness_independent(testutil::FromMask(mask, n), g, m);
  }
  for (std::uint64_t a = 0; a < 256; ++a) {
    if (!ind[a]) continue;
    for (std::uint64_t sub = a; sub; sub = (sub - 1) & a) {
      if (!ind[sub]) FAIL("subset of an independent set is dependent");
    }
    for (std::uint64_t b = 0; b < 256; ++b) {
      if (!ind[b] || __builtin_popcountll(b) <= __builtin_popcountll(a)) continue;
      bool exchange = false;
      for (int x = 0; x < n && !exchange; ++x) {
        if ((b >> x & 1) && !(a >> x & 1)) exchange = ind[a | (std::uint64_t{1} << x)];
      }
      if (!exchange) FAIL("exchange property fails");
    }
  }
}

TEST_CASE("fairness matroid from proportions") {
  const std::vector<double> lo2 = {0.45, 0.45}, hi2 = {0.55, 0.55};
  const FairnessMatroid m = fairness_from_proportions(lo2, hi2, 10);
  CHECK(m.l == std::vector<int>{4, 4});
  CHECK(m.u == std::vector<int>{6, 6});
  CHECK(m.k == 10);

  const std::vector<double> zero = {0.0, 0.0}, one = {1.0, 1.0};
  CHECK(fairness_from_proportions(zero, one, 3).l == std::vector<int>{0, 0});

  const std::vector<double> lo5(5, 0.9 / 5), hi5(5, 1.1 / 5);
  const FairnessMatroid m5 = fairness_from_proportions(lo5, hi5, 20);
  CHECK(m5.l == std::vector<int>(5, 3));
  CHECK(m5.u == std::vector<int>(5, 5));
  CHECK(m5.k == 20);

  const std::vector<double> heavy = {0.7, 0.7};
  try {
    fairness_from_proportions(heavy, one, 10);
    FAIL("expected infeasible-fairness");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasibleFairness);
  }
}

TEST_CASE("incremental independence oracles agree with the predicates") {
  const InstanceFile inst = testutil::RandomCover(12, 10, 3, 5, 2);
  const PartitionedGroundSet g(inst.groups);
  const FairnessMatroid m{{1, 0, 1}, {2, 2, 3}, 5};
  const CostVector c(testutil::RandomCosts(4, 10, 0.5, 2.0));
  const PartitionProportions p({0.2, 0.3, 0.5});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::vector<Element> order = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::mt19937_64 gen(seed);
    std::shuffle(order.begin(), order.end(), gen);
    FairnessIndependence fi(g, m);
    KnapsackPartitionIndependence ki(g, c, p, 4.0);
    std::vector<Element> sf, sk;
    for (Element x : order) {
      std::vector<Element> tf = sf, tk = sk;
      tf.push_back(x);
      tk.push_back(x);
      CHECK(fi.CanAdd(x) == fairness_independent(tf, g, m));
      CHECK(ki.CanAdd(x) == knapsack_partition_feasible(tk, g, c, p, 4.0));
      if (fi.CanAdd(x)) {
        fi.Add(x);
        sf.push_back(x);
      }
      if (ki.CanAdd(x)) {
        ki.Add(x);
        sk.push_back(x);
      }
    }
  }
}

}  // TEST_SUITE
