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
#include <numeric>
#include <vector>

#include "doctest.h"
#include "subcover/constraints.hpp"
#include "subcover/errors.hpp"
#include "subcover/instances.hpp"
#include "subcover/maximize.hpp"
#include "test_util.hpp"

using namespace subcover;

namespace {

ElementSet Sorted(ElementSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

// Brute-force max of the naive formula under per-group caps.
double CapsOpt(const InstanceFile& inst, const std::vector<int>& caps) {
  const int groups = static_cast<int>(caps.size());
  return testutil::ScanMasks(
             inst.n,
             [&](const ElementSet& s) {
               const auto c = testutil::Counts(inst, s, groups);
               for (int j = 0; j < groups; ++j) {
                 if (c[static_cast<size_t>(j)] > caps[static_cast<size_t>(j)]) return false;
               }
               return true;
             },
             [&](const ElementSet& s) { return testutil::Naive(inst, s); }, true)
      .value;
}

std::vector<int> GroupSizes(const InstanceFile& inst) {
  std::vector<int> sizes(static_cast<size_t>(testutil::NumGroups(inst)), 0);
  for (int g : inst.groups) ++sizes[static_cast<size_t>(g)];
  return sizes;
}

// Caps between lo and the group size, drawn from the seed.
std::vector<int> RandomCaps(std::uint64_t seed, const std::vector<int>& sizes, int lo) {
  std::mt19937_64 gen(seed);
  std::vector<int> caps;
  for (int s : sizes) caps.push_back(std::uniform_int_distribution<int>(std::min(lo, s), s)(gen));
  return caps;
}

InstanceFile TagsExample() {
  InstanceFile inst;
  inst.kind = ObjectiveKind::kSetCover;
  inst.n = 3;
  inst.tag_universe = 3;
  inst.tags = {{0, 1}, {0}, {2}};
  inst.groups = {0, 0, 0};
  return inst;
}

}  // namespace

TEST_SUITE("maximize") {

TEST_CASE("formula helpers") {
  CHECK(nonmono_bi_candidates(2.0, 0.5) == 8);
  CHECK(nonmono_bi_rounds(0.25) == 8);
  CHECK(nonmono_bi_steps(2.7) == 2);
  CHECK(nonmono_bi_steps(0.6) == 0);
  CHECK(halving_rounds(0.05) == 5);
  CHECK(halving_rounds(0.5) == 1);
  CHECK(halving_rounds(0.1) == 4);
}

TEST_CASE("block schedules") {
  const std::vector<int> k1 = {9, 10};
  const BlockSchedule a = block_schedule_mono(k1);
  CHECK(a.phi == 2);
  CHECK(a.r == std::vector<int>{4, 5});
  const std::vector<int> k2 = {6, 9};
  const BlockSchedule b = block_schedule_gcd(k2);
  CHECK(b.phi == 3);
  CHECK(b.r == std::vector<int>{2, 3});
  const std::vector<int> k3 = {2, 2};
  CHECK(block_schedule_mono(k3).phi < 1);
  CHECK(block_schedule_gcd(k3).phi == 2);
}

TEST_CASE("nonmono_bi on the path graph with one forced pick") {
  InstanceFile inst;
  inst.kind = ObjectiveKind::kGraphCut;
  inst.n = 3;
  inst.edges = {{0, 1, 1.0}, {1, 2, 1.0}};
  inst.groups = {0, 0, 0};
  const auto f = make_objective(inst);
  QueryCountedOracle oracle(*f);
  SeededRng rng(1);
  const MaxResult r = nonmono_bi(oracle, make_ground(inst), PartitionProportions({1.0}), 1.0, 2.0, rng);
  CHECK(r.S == ElementSet{1});
  CHECK(r.f_value == 2.0);
}

TEST_CASE("nonmono_bi rejects budgets that admit nothing") {
  const InstanceFile inst = testutil::RandomGraph(2, 8, 0.5, 2);
  const auto f = make_objective(inst);
  QueryCountedOracle oracle(*f);
  SeededRng rng(1);
  try {
    nonmono_bi(oracle, make_ground(inst), PartitionProportions({0.5, 0.5}), 1.5, 0.25, rng);
    FAIL("expected degenerate-budget");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateBudget);
  }
}

TEST_CASE("greedy_knapsack_bi tags example picks a then c") {
  const InstanceFile inst = TagsExample();
  const auto f = make_objective(inst);
  QueryCountedOracle oracle(*f);
  const MaxResult r = greedy_knapsack_bi(oracle, make_ground(inst), CostVector::Unit(3),
                                         PartitionProportions({1.0}), 2.0, 0.5);
  CHECK(r.S == ElementSet{0, 2});
  CHECK(r.f_value == 3.0);
  CHECK(r.per_group_costs[0] == 2.0);
}

TEST_CASE("toy instance traces") {
  const InstanceFile toy = gen_toy_example();
  const auto f = make_objective(toy);
  const auto g = make_ground(toy);
  const std::vector<int> caps = {2, 2};

  SUBCASE("standard greedy reaches 2") {
    QueryCountedOracle oracle(*f);
    PartitionCapsIndependence ind(g, caps);
    const MaxResult r = standard_greedy_matroid(oracle, g, ind);
    CHECK(Sorted(r.S) == ElementSet{0, 1, 4, 5});
    CHECK(r.f_value == 2.0);
  }
  SUBCASE("gcd variant picks one per group per round") {
    QueryCountedOracle oracle(*f);
    const MaxResult r = block_greedy_gcd(oracle, g, caps);
    CHECK(r.S == ElementSet{0, 5, 2, 4});
    CHECK(r.f_value == 3.0);
  }
  SUBCASE("mono variant falls back to standard greedy") {
    QueryCountedOracle oracle(*f);
    const MaxResult r = block_greedy_mono(oracle, g, caps);
    CHECK(r.f_value == 2.0);
  }
  SUBCASE("block_fair_bi with one round") {
    QueryCountedOracle oracle(*f);
    const MaxResult r = block_fair_bi(oracle, g, FairnessMatroid{{0, 0}, {2, 2}, 4}, 0.5);
    CHECK(Sorted(r.S) == ElementSet{0, 1, 4, 5});
    CHECK(r.f_value == 2.0);
  }
}

TEST_CASE("hardness instance greedy value") {
  const InstanceFile inst = gen_hardness({3, 3}, 0.1);
  const auto f = make_objective(inst);
  const auto g = make_ground(inst);
  QueryCountedOracle oracle(*f);
  PartitionCapsIndependence ind(g, {3, 3});
  const MaxResult r = standard_greedy_matroid(oracle, g, ind);
  CHECK(std::abs(r.f_value - 1.8) < 1e-12);
  CHECK(std::abs(CapsOpt(inst, {3, 3}) - 3.0) < 1e-12);
}

TEST_CASE("greedy_augment edge cases") {
  const InstanceFile toy = gen_toy_example();
  const auto f = make_objective(toy);
  const auto g = make_ground(toy);
  const std::vector<int> caps = {2, 2};
  QueryCountedOracle oracle(*f);
  const std::vector<Element> full = {2, 3, 4, 5};
  CHECK(greedy_augment(oracle, g, caps, full).S == ElementSet{2, 3, 4, 5});

  PartitionCapsIndependence ind(g, caps);
  const MaxResult plain = standard_greedy_matroid(oracle, g, ind);
  CHECK(greedy_augment(oracle, g, caps, {}).S == plain.S);

  const std::vector<Element> over = {0, 1, 2};
  try {
    greedy_augment(oracle, g, caps, over);
    FAIL("expected invalid-input");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidInput);
  }
}

TEST_CASE("caps larger than a group are rejected") {
  const InstanceFile toy = gen_toy_example();
  const auto f = make_objective(toy);
  QueryCountedOracle oracle(*f);
  const std::vector<int> caps = {5, 2};
  CHECK_THROWS_AS(block_greedy_mono(oracle, make_ground(toy), caps), Error);
}

TEST_CASE("random greedy with kappa one is the argmax") {
  const InstanceFile inst = testutil::RandomCover(5, 12, 2, 15, 5);
  const auto f = make_objective(inst);
  const auto g = make_ground(inst);
  double best = -1;
  Element arg = 0;
  for (Element x = 0; x < inst.n; ++x) {
    const double v = testutil::Naive(inst, {x});
    if (v > best) best = v, arg = x;
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    QueryCountedOracle oracle(*f);
    SeededRng rng(seed);
    CHECK(random_greedy_cardinality(oracle, g, 1, rng).S == ElementSet{arg});
    SeededRng rng2(seed);
    CHECK(random_greedy_cardinality(oracle, g, inst.n, rng2).S.size() <= static_cast<size_t>(inst.n));
  }
}

TEST_CASE("feasibility post-conditions hold on every run") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const bool graph = seed % 2 == 0;
    const int n = 8 + static_cast<int>(seed % 7);
    const InstanceFile inst = graph ? testutil::RandomGraph(seed, n, 0.4, 2)
                                    : testutil::RandomCover(seed, n, 2, 12, 4);
    const auto f = make_objective(inst);
    const auto g = make_ground(inst);
    const PartitionProportions p({0.4, 0.6});
    const double v = 2.0 + static_cast<double>(seed % 5);
    const auto costs = testutil::RandomCosts(seed, n, 0.5, 2.0);
    const CostVector c(costs);
    for (double eps : {0.1, 0.25, 0.5}) {
      QueryCountedOracle oracle(*f);
      SeededRng rng(seed);
      const MaxResult a = nonmono_bi(oracle, g, p, v, eps, rng);
      const auto counts = testutil::Counts(inst, a.S, 2);
      for (int j = 0; j < 2; ++j) {
        CHECK(counts[static_cast<size_t>(j)] <=
              nonmono_bi_rounds(eps) * nonmono_bi_steps(p[j] * v));
      }
      const MaxResult b = greedy_knapsack_bi(oracle, g, c, p, v, eps);
      std::vector<double> spent(2, 0.0);
      for (Element x : b.S) spent[static_cast<size_t>(inst.groups[static_cast<size_t>(x)])] += costs[static_cast<size_t>(x)];
      for (int j = 0; j < 2; ++j) {
        CHECK(spent[static_cast<size_t>(j)] < 2.0 * halving_rounds(eps) * p[j] * v);
      }
      for (const BlockTrace& t : b.trace) {
        const double bj = p[t.group] * v;
        if (t.exhausted) {
          CHECK(t.added_cost < bj + 1e-9);
        } else {
          CHECK(t.added_cost >= bj - 1e-9);
          CHECK(t.added_cost < 2.0 * bj);
        }
      }
    }
    const std::vector<int> sizes = GroupSizes(inst);
    const std::vector<int> caps = RandomCaps(seed, sizes, 1);
    QueryCountedOracle oracle(*f);
    for (const MaxResult& r : {block_greedy_mono(oracle, g, caps), block_greedy_gcd(oracle, g, caps)}) {
      const auto counts = testutil::Counts(inst, r.S, 2);
      for (int j = 0; j < 2; ++j) CHECK(counts[static_cast<size_t>(j)] <= caps[static_cast<size_t>(j)]);
    }
    const FairnessMatroid m{{1, 1}, {std::max(1, sizes[0] / 2), std::max(1, sizes[1] / 2)}, 4};
    const MaxResult fair = block_fair_bi(oracle, g, m, 0.1);
    CHECK(fairness_beta_member(fair.S, g, m, halving_rounds(0.1)));
  }
}

TEST_CASE("reported values and tallies match the naive formula") {
  const InstanceFile inst = testutil::RandomCover(77, 14, 3, 20, 5, true);
  const auto f = make_objective(inst);
  const auto g = make_ground(inst);
  QueryCountedOracle oracle(*f);
  const std::vector<int> caps = RandomCaps(3, GroupSizes(inst), 4);
  const MaxResult r = block_greedy_mono(oracle, g, caps);
  CHECK(std::abs(r.f_value - testutil::Naive(inst, r.S)) < 1e-9);
  CHECK(r.per_group_counts == testutil::Counts(inst, r.S, 3));
}

TEST_CASE("monotone block greedy ratio and query bound") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const InstanceFile inst = testutil::RandomCover(seed + 100, 13, 2, 18, 4);
    const auto f = make_objective(inst);
    const auto g = make_ground(inst);
    const std::vector<int> sizes = GroupSizes(inst);
    if (*std::min_element(sizes.begin(), sizes.end()) < 4) continue;
    const std::vector<int> caps = RandomCaps(seed, sizes, 4);
    const double opt = CapsOpt(inst, caps);
    QueryCountedOracle oracle(*f);
    const MaxResult r = block_greedy_mono(oracle, g, caps);
    const int phi = block_schedule_mono(caps).phi;
    const double bound = phi >= 1 ? 1 - 1 / std::exp(1.0) - 1.0 / (phi + 1) : 0.5;
    CHECK(r.f_value >= bound * opt - 1e-9);
    std::int64_t cap_queries = 0;
    for (int j = 0; j < 2; ++j) cap_queries += sizes[static_cast<size_t>(j)] * caps[static_cast<size_t>(j)];
    CHECK(r.queries <= cap_queries);
    QueryCountedOracle o2(*f);
    const MaxResult aug = greedy_augment(o2, g, caps, r.S);
    CHECK(aug.f_value >= 0.5 * opt - 1e-9);
    CHECK(aug.f_value >= r.f_value - 1e-9);
  }
}

TEST_CASE("block_fair_bi reaches (1 - eps) of the fair optimum") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const InstanceFile inst = testutil::RandomCover(seed + 300, 11, 2, 14, 4);
    const auto f = make_objective(inst);
    const auto g = make_ground(inst);
    const FairnessMatroid m{{1, 1}, {3, 3}, 4};
    const double opt = testutil::ScanMasks(
                           inst.n, [&](const ElementSet& s) { return fairness_independent(s, g, m); },
                           [&](const ElementSet& s) { return testutil::Naive(inst, s); }, true)
                           .value;
    for (double eps : {0.1, 0.25}) {
      QueryCountedOracle oracle(*f);
      const MaxResult r = block_fair_bi(oracle, g, m, eps);
      CHECK(r.f_value >= (1 - eps) * opt - 1e-9);
    }
  }
}

TEST_CASE("shrunk caps keep a c/(c+1) share of the optimum") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const InstanceFile inst = testutil::RandomCover(seed + 500, 12, 2, 15, 4);
    const std::vector<int> sizes = GroupSizes(inst);
    const std::vector<int> caps = RandomCaps(seed, sizes, 2);
    for (int c : {2, 3}) {
      bool ok = true;
      std::vector<int> shrunk;
      for (int k : caps) {
        ok = ok && k / c >= k - c * (k / c);
        shrunk.push_back(c * (k / c));
      }
      if (!ok) continue;
      CHECK(CapsOpt(inst, shrunk) >= static_cast<double>(c) / (c + 1) * CapsOpt(inst, caps) - 1e-9);
      ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("seeded runs are bit-reproducible") {
  const InstanceFile inst = testutil::RandomGraph(9, 14, 0.4, 2);
  const auto f = make_objective(inst);
  const auto g = make_ground(inst);
  const std::vector<int> caps = {3, 3};
  auto once = [&] {
    QueryCountedOracle oracle(*f);
    SeededRng rng(42);
    const MaxResult a = nonmono_bi(oracle, g, PartitionProportions({0.5, 0.5}), 4.0, 0.25, rng);
    const MaxResult b = block_greedy_nonmono(oracle, g, caps, rng);
    return std::make_pair(a.S, b.S);
  };
  CHECK(once() == once());
}

}  // TEST_SUITE
