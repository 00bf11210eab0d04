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

#include "subcover/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>

#include <omp.h>

namespace subcover::kernels {
namespace {

std::atomic<Policy> g_policy{Policy::kAuto};

bool Better(double a, double b, bool maximize) {
  return maximize ? a > b : a < b;
}

// Merge rule shared by every enumeration path.
void Offer(MaskBest& best, std::uint64_t mask, double value, bool maximize) {
  if (!best.found || Better(value, best.score, maximize) ||
      (value == best.score && mask < best.mask)) {
    best.mask = mask;
    best.score = value;
    best.found = true;
  }
}

void Merge(MaskBest& into, const MaskBest& other, bool maximize) {
  into.enumerated += other.enumerated;
  if (other.found) Offer(into, other.mask, other.score, maximize);
}

bool UseParallel(std::size_t work) {
  switch (g_policy.load()) {
    case Policy::kSerial: return false;
    case Policy::kParallel: return true;
    case Policy::kAuto: return work >= kParallelMinPool && omp_get_max_threads() > 1;
  }
  return false;
}

std::vector<std::uint64_t> MasksWithPopcount(int n, int k) {
  std::vector<std::uint64_t> masks;
  if (k < 0 || k > n) return masks;
  if (k == 0) return {0};
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t m = (std::uint64_t{1} << k) - 1;
  while (m < limit) {
    masks.push_back(m);
    // Gosper's hack: next mask with the same popcount.
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return masks;
}

}  // namespace

void SetPolicy(Policy policy) { g_policy.store(policy); }
Policy GetPolicy() { return g_policy.load(); }

void ScanGainsSerial(const GainState& state, std::span<const Element> pool,
                     std::span<double> out) {
  for (std::size_t i = 0; i < pool.size(); ++i) out[i] = state.Gain(pool[i]);
}

void ScanGainsParallel(const GainState& state, std::span<const Element> pool,
                       std::span<double> out) {
  const auto count = static_cast<std::int64_t>(pool.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        state.Gain(pool[static_cast<std::size_t>(i)]);
  }
}

void ScanGains(const GainState& state, std::span<const Element> pool,
               std::span<double> out) {
  if (UseParallel(pool.size())) {
    ScanGainsParallel(state, pool, out);
  } else {
    ScanGainsSerial(state, pool, out);
  }
}

std::optional<std::size_t> ArgmaxPosition(std::span<const double> scores) {
  if (scores.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

std::vector<std::size_t> TopNonNegative(std::span<const double> scores,
                                        std::size_t m) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] >= 0.0) order.push_back(i);
  }
  const std::size_t keep = std::min(m, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep),
                    order.end(), [&](std::size_t a, std::size_t b) {
                      if (scores[a] != scores[b]) return scores[a] > scores[b];
                      return a < b;
                    });
  order.resize(keep);
  return order;
}

MaskBest EnumerateSerial(int n, const MaskScore& score, bool maximize) {
  MaskBest best;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    ++best.enumerated;
    if (auto value = score(mask)) Offer(best, mask, *value, maximize);
  }
  return best;
}

MaskBest EnumerateParallel(int n, const MaskScore& score, bool maximize) {
  MaskBest best;
  const auto limit = static_cast<std::int64_t>(std::uint64_t{1} << n);
#pragma omp parallel
  {
    MaskBest local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < limit; ++i) {
      const auto mask = static_cast<std::uint64_t>(i);
      ++local.enumerated;
      if (auto value = score(mask)) Offer(local, mask, *value, maximize);
    }
#pragma omp critical(subcover_enumerate)
    Merge(best, local, maximize);
  }
  return best;
}

MaskBest Enumerate(int n, const MaskScore& score, bool maximize) {
  return UseParallel(std::size_t{1} << n) ? EnumerateParallel(n, score, maximize)
                                          : EnumerateSerial(n, score, maximize);
}

MaskBest EnumerateLevel(int n, int popcount, const MaskScore& score,
                        bool maximize) {
  const std::vector<std::uint64_t> masks = MasksWithPopcount(n, popcount);
  MaskBest best;
  if (!UseParallel(masks.size())) {
    for (std::uint64_t mask : masks) {
      ++best.enumerated;
      if (auto value = score(mask)) Offer(best, mask, *value, maximize);
    }
    return best;
  }
  const auto count = static_cast<std::int64_t>(masks.size());
#pragma omp parallel
  {
    MaskBest local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      const std::uint64_t mask = masks[static_cast<std::size_t>(i)];
      ++local.enumerated;
      if (auto value = score(mask)) Offer(local, mask, *value, maximize);
    }
#pragma omp critical(subcover_enumerate_level)
    Merge(best, local, maximize);
  }
  return best;
}

}  // namespace subcover::kernels
