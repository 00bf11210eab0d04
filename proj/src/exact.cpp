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

#include "subcover/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>

#include "subcover/errors.hpp"
#include "subcover/kernels.hpp"

namespace subcover {
namespace {

constexpr double kTol = 1e-9;

void Guard(const PartitionedGroundSet& ground) {
  if (ground.size() > kMaxExactSize) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "exact solvers enumerate at most " + std::to_string(kMaxExactSize) +
                    " elements, got " + std::to_string(ground.size()));
  }
}

ElementSet MaskToSet(std::uint64_t mask) {
  ElementSet s;
  while (mask != 0) {
    s.push_back(static_cast<Element>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

// Counts evaluations from inside parallel enumeration, charges them at the end.
class Evaluator {
 public:
  explicit Evaluator(QueryCountedOracle& oracle) : oracle_(oracle) {}
  ~Evaluator() { oracle_.Charge(count_.load()); }

  double operator()(std::uint64_t mask) {
    count_.fetch_add(1, std::memory_order_relaxed);
    const ElementSet s = MaskToSet(mask);
    return oracle_.objective().Evaluate(s);
  }

 private:
  QueryCountedOracle& oracle_;
  std::atomic<std::int64_t> count_{0};
};

std::vector<int> MaskCounts(std::uint64_t mask, const PartitionedGroundSet& ground) {
  std::vector<int> counts(static_cast<size_t>(ground.num_groups()), 0);
  while (mask != 0) {
    ++counts[static_cast<size_t>(ground.group_of(std::countr_zero(mask)))];
    mask &= mask - 1;
  }
  return counts;
}

std::vector<double> MaskCosts(std::uint64_t mask, const PartitionedGroundSet& ground,
                              const CostVector& costs) {
  std::vector<double> used(static_cast<size_t>(ground.num_groups()), 0.0);
  while (mask != 0) {
    const int x = std::countr_zero(mask);
    used[static_cast<size_t>(ground.group_of(x))] += costs[x];
    mask &= mask - 1;
  }
  return used;
}

ExactResult FromBest(const kernels::MaskBest& best) {
  ExactResult out;
  out.S_opt = MaskToSet(best.mask);
  out.value = best.score;
  out.enumerated = best.enumerated;
  return out;
}

void CheckThreshold(QueryCountedOracle& oracle, const PartitionedGroundSet& ground,
                    double tau) {
  if (!(tau >= 0.0)) throw Error(ErrorCode::kInvalidParameter, "tau must be >= 0");
  if (oracle.objective().monotone() && tau > oracle.Evaluate(ground.all()) + kTol) {
    throw Error(ErrorCode::kInfeasibleThreshold, "tau exceeds f(U)");
  }
}

ExactResult RequireFound(const kernels::MaskBest& best) {
  if (!best.found) {
    throw Error(ErrorCode::kInfeasibleThreshold, "no feasible set reaches tau");
  }
  return FromBest(best);
}

}  // namespace

ExactResult brute_force_smp(QueryCountedOracle& oracle,
                            const PartitionedGroundSet& ground,
                            std::span<const int> caps) {
  Guard(ground);
  if (static_cast<int>(caps.size()) != ground.num_groups()) {
    throw Error(ErrorCode::kInvalidCaps, "need one cap per group");
  }
  Evaluator eval(oracle);
  const auto best = kernels::Enumerate(
      ground.size(),
      [&](std::uint64_t mask) -> std::optional<double> {
        const std::vector<int> counts = MaskCounts(mask, ground);
        for (size_t j = 0; j < counts.size(); ++j) {
          if (counts[j] > caps[j]) return std::nullopt;
        }
        return eval(mask);
      },
      true);
  return FromBest(best);
}

ExactResult brute_force_smkp(QueryCountedOracle& oracle,
                             const PartitionedGroundSet& ground,
                             const CostVector& costs,
                             const PartitionProportions& p, double v) {
  Guard(ground);
  Evaluator eval(oracle);
  const auto best = kernels::Enumerate(
      ground.size(),
      [&](std::uint64_t mask) -> std::optional<double> {
        const std::vector<double> used = MaskCosts(mask, ground, costs);
        for (int j = 0; j < ground.num_groups(); ++j) {
          if (used[static_cast<size_t>(j)] > p[j] * v + kSumTolerance) return std::nullopt;
        }
        return eval(mask);
      },
      true);
  return FromBest(best);
}

ExactResult brute_force_scp(QueryCountedOracle& oracle,
                            const PartitionedGroundSet& ground,
                            const PartitionProportions& p, double tau) {
  Guard(ground);
  CheckThreshold(oracle, ground, tau);
  Evaluator eval(oracle);
  const auto best = kernels::Enumerate(
      ground.size(),
      [&](std::uint64_t mask) -> std::optional<double> {
        if (eval(mask) < tau - kTol) return std::nullopt;
        const std::vector<int> counts = MaskCounts(mask, ground);
        double v = 0.0;
        for (int j = 0; j < ground.num_groups(); ++j) {
          v = std::max(v, counts[static_cast<size_t>(j)] / p[j]);
        }
        return v;
      },
      false);
  return RequireFound(best);
}

ExactResult brute_force_sckp(QueryCountedOracle& oracle,
                             const PartitionedGroundSet& ground,
                             const CostVector& costs,
                             const PartitionProportions& p, double tau) {
  Guard(ground);
  CheckThreshold(oracle, ground, tau);
  const int n = ground.size();
  std::vector<double> fvals(std::size_t{1} << n);
  {
    Evaluator eval(oracle);
    const auto limit = static_cast<std::int64_t>(fvals.size());
#pragma omp parallel for schedule(static) if (kernels::GetPolicy() != kernels::Policy::kSerial)
    for (std::int64_t i = 0; i < limit; ++i) {
      fvals[static_cast<size_t>(i)] = eval(static_cast<std::uint64_t>(i));
    }
  }
  std::vector<double> group_max(static_cast<size_t>(ground.num_groups()), 0.0);
  for (Element x : ground.all()) {
    auto& c = group_max[static_cast<size_t>(ground.group_of(x))];
    c = std::max(c, costs[x]);
  }

  const auto best = kernels::Enumerate(
      n,
      [&](std::uint64_t mask) -> std::optional<double> {
        if (fvals[mask] < tau - kTol) return std::nullopt;
        const std::vector<double> used = MaskCosts(mask, ground, costs);
        double v = 0.0;
        for (int j = 0; j < ground.num_groups(); ++j) {
          v = std::max(v, used[static_cast<size_t>(j)] / p[j]);
        }
        return v;
      },
      false);
  ExactResult out = RequireFound(best);

  const auto p1 = kernels::Enumerate(
      n,
      [&](std::uint64_t mask) -> std::optional<double> {
        if (fvals[mask] < tau - kTol) return std::nullopt;
        const std::vector<double> used = MaskCosts(mask, ground, costs);
        double total = 0.0;
        for (double u : used) total += u;
        for (int j = 0; j < ground.num_groups(); ++j) {
          const auto g = static_cast<size_t>(j);
          if (used[g] > p[j] * total + group_max[g] + kSumTolerance) return std::nullopt;
        }
        return total;
      },
      false);
  if (p1.found) out.p1_value = p1.score;
  out.enumerated += p1.enumerated;
  return out;
}

ExactResult brute_force_smf(QueryCountedOracle& oracle,
                            const PartitionedGroundSet& ground,
                            const FairnessMatroid& m) {
  Guard(ground);
  m.Validate();
  if (static_cast<int>(m.l.size()) != ground.num_groups()) {
    throw Error(ErrorCode::kInvalidParameter, "matroid group count mismatch");
  }
  Evaluator eval(oracle);
  const auto best = kernels::Enumerate(
      ground.size(),
      [&](std::uint64_t mask) -> std::optional<double> {
        const std::vector<int> counts = MaskCounts(mask, ground);
        long load = 0;
        for (size_t c = 0; c < counts.size(); ++c) {
          if (counts[c] > m.u[c]) return std::nullopt;
          load += std::max(counts[c], m.l[c]);
        }
        if (load > m.k) return std::nullopt;
        return eval(mask);
      },
      true);
  return FromBest(best);
}

ExactResult brute_force_scf(QueryCountedOracle& oracle,
                            const PartitionedGroundSet& ground,
                            std::span<const double> p_lo,
                            std::span<const double> p_hi, double tau) {
  Guard(ground);
  if (static_cast<int>(p_lo.size()) != ground.num_groups() ||
      p_hi.size() != p_lo.size()) {
    throw Error(ErrorCode::kInvalidParameter, "need one proportion pair per group");
  }
  if (!(tau >= 0.0)) throw Error(ErrorCode::kInvalidParameter, "tau must be >= 0");
  ExactResult out;
  if (tau == 0.0) return out;

  Evaluator eval(oracle);
  for (int size = 0; size <= ground.size(); ++size) {
    const auto best = kernels::EnumerateLevel(
        ground.size(), size,
        [&](std::uint64_t mask) -> std::optional<double> {
          const std::vector<int> counts = MaskCounts(mask, ground);
          for (size_t c = 0; c < counts.size(); ++c) {
            if (counts[c] < p_lo[c] * size - kSumTolerance ||
                counts[c] > p_hi[c] * size + kSumTolerance) {
              return std::nullopt;
            }
          }
          if (eval(mask) < tau - kTol) return std::nullopt;
          return 0.0;
        },
        false);
    out.enumerated += best.enumerated;
    if (best.found) {
      out.S_opt = MaskToSet(best.mask);
      out.value = size;
      return out;
    }
  }
  throw Error(ErrorCode::kInfeasibleThreshold, "no fair set reaches tau");
}

ExactResult brute_force_cardinality(QueryCountedOracle& oracle, int kappa) {
  const int n = oracle.size();
  if (n > kMaxExactSize) {
    throw Error(ErrorCode::kInstanceTooLarge, "too many elements to enumerate");
  }
  Evaluator eval(oracle);
  const auto best = kernels::Enumerate(
      n,
      [&](std::uint64_t mask) -> std::optional<double> {
        if (std::popcount(mask) > kappa) return std::nullopt;
        return eval(mask);
      },
      true);
  return FromBest(best);
}

}  // namespace subcover
