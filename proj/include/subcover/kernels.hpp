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
#include <optional>
#include <span>
#include <vector>

#include "subcover/oracle.hpp"

namespace subcover::kernels {

// Serial kernels are the reference; parallel kernels must match them
// bit-for-bit on every input.
enum class Policy { kAuto, kSerial, kParallel };

void SetPolicy(Policy policy);
Policy GetPolicy();
// Pools smaller than this are scanned serially under kAuto.
inline constexpr std::size_t kParallelMinPool = 256;

void ScanGainsSerial(const GainState& state, std::span<const Element> pool,
                     std::span<double> out);
void ScanGainsParallel(const GainState& state, std::span<const Element> pool,
                       std::span<double> out);
void ScanGains(const GainState& state, std::span<const Element> pool,
               std::span<double> out);

// Position of the largest score; the earliest position wins ties.
std::optional<std::size_t> ArgmaxPosition(std::span<const double> scores);

// Positions of the top-m scores among entries with score >= 0, ordered by
// score descending then position ascending. May return fewer than m.
std::vector<std::size_t> TopNonNegative(std::span<const double> scores,
                                        std::size_t m);

// Best subset of an n-element universe under a mask predicate. `score` maps a
// feasible mask to a value; `better(a, b)` is a strict preference. Ties go to
// the numerically smallest mask.
struct MaskBest {
  std::uint64_t mask = 0;
  double score = 0.0;
  bool found = false;
  std::uint64_t enumerated = 0;
};

using MaskScore = std::function<std::optional<double>(std::uint64_t mask)>;

MaskBest EnumerateSerial(int n, const MaskScore& score, bool maximize);
MaskBest EnumerateParallel(int n, const MaskScore& score, bool maximize);
MaskBest Enumerate(int n, const MaskScore& score, bool maximize);

// Same search restricted to masks with exactly `popcount` bits set.
MaskBest EnumerateLevel(int n, int popcount, const MaskScore& score,
                        bool maximize);

}  // namespace subcover::kernels
