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

#include "subcover/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "subcover/errors.hpp"

namespace subcover {

PartitionProportions::PartitionProportions(std::vector<double> p)
    : p_(std::move(p)) {
  if (p_.empty()) {
    throw Error(ErrorCode::kInvalidProportions, "no proportions given");
  }
  for (double pj : p_) {
    if (!(pj > 0.0)) {
      throw Error(ErrorCode::kInvalidProportions, "proportions must be positive");
    }
  }
  const double total = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::kInvalidProportions, "proportions must sum to 1");
  }
}

PartitionProportions PartitionProportions::Uniform(int groups) {
  return PartitionProportions(
      std::vector<double>(static_cast<size_t>(groups), 1.0 / groups));
}

double PartitionProportions::min() const {
  return *std::min_element(p_.begin(), p_.end());
}

CostVector::CostVector(std::vector<double> c) : c_(std::move(c)) {
  for (double x : c_) {
    if (!(x > 0.0)) {
      throw Error(ErrorCode::kInvalidInstance, "costs must be positive");
    }
  }
}

double CostVector::Sum(std::span<const Element> s) const {
  double total = 0.0;
  for (Element x : s) total += (*this)[x];
  return total;
}

double CostVector::min() const { return *std::min_element(c_.begin(), c_.end()); }
double CostVector::max() const { return *std::max_element(c_.begin(), c_.end()); }

void FairnessMatroid::Validate() const {
  if (l.size() != u.size() || l.empty()) {
    throw Error(ErrorCode::kInvalidParameter, "l and u must have one entry per group");
  }
  long total = 0;
  for (size_t c = 0; c < l.size(); ++c) {
    if (l[c] < 0 || l[c] > u[c]) {
      throw Error(ErrorCode::kInvalidParameter, "need 0 <= l_c <= u_c");
    }
    total += l[c];
  }
  if (k < 0 || total > k) {
    throw Error(ErrorCode::kInvalidParameter, "sum of lower caps exceeds k");
  }
}

FairnessMatroid FairnessMatroid::Scaled(int beta) const {
  FairnessMatroid out = *this;
  for (int& x : out.l) x *= beta;
  for (int& x : out.u) x *= beta;
  out.k *= beta;
  return out;
}

bool partition_feasible(std::span<const Element> s,
                        const PartitionedGroundSet& ground,
                        const PartitionProportions& p, double v) {
  const std::vector<int> counts = ground.GroupCounts(s);
  for (int j = 0; j < ground.num_groups(); ++j) {
    if (counts[static_cast<size_t>(j)] > p[j] * v + kSumTolerance) return false;
  }
  return true;
}

bool knapsack_partition_feasible(std::span<const Element> s,
                                 const PartitionedGroundSet& ground,
                                 const CostVector& costs,
                                 const PartitionProportions& p, double v) {
  const std::vector<double> used = ground.GroupCosts(s, costs.values());
  for (int j = 0; j < ground.num_groups(); ++j) {
    if (used[static_cast<size_t>(j)] > p[j] * v + kSumTolerance) return false;
  }
  return true;
}

bool fairness_independent(std::span<const Element> s,
                          const PartitionedGroundSet& ground,
                          const FairnessMatroid& m) {
  return fairness_beta_member(s, ground, m, 1);
}

bool fairness_beta_member(std::span<const Element> s,
                          const PartitionedGroundSet& ground,
                          const FairnessMatroid& m, int beta) {
  const std::vector<int> counts = ground.GroupCounts(s);
  long load = 0;
  for (size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] > beta * m.u[c]) return false;
    load += std::max(counts[c], beta * m.l[c]);
  }
  return load <= static_cast<long>(beta) * m.k;
}

FairnessMatroid fairness_from_proportions(std::span<const double> p_lo,
                                          std::span<const double> p_hi,
                                          int k_guess) {
  if (p_lo.size() != p_hi.size() || p_lo.empty() || k_guess <= 0) {
    throw Error(ErrorCode::kInvalidParameter, "malformed fairness proportions");
  }
  FairnessMatroid m;
  m.k = k_guess;
  long total = 0;
  for (size_t c = 0; c < p_lo.size(); ++c) {
    if (!(p_lo[c] >= 0.0 && p_lo[c] <= p_hi[c] && p_hi[c] <= 1.0)) {
      throw Error(ErrorCode::kInvalidParameter, "need 0 <= p_lo <= p_hi <= 1");
    }
    // Products such as 0.18 * 20 land a hair off the integer; snap first.
    const double lo = p_lo[c] * k_guess;
    const double hi = p_hi[c] * k_guess;
    m.l.push_back(static_cast<int>(std::floor(lo + 1e-9)));
    m.u.push_back(static_cast<int>(std::ceil(hi - 1e-9)));
    total += m.l.back();
  }
  if (total > k_guess) {
    throw Error(ErrorCode::kInfeasibleFairness, "sum of lower caps exceeds k");
  }
  m.Validate();
  return m;
}

PartitionCapsIndependence::PartitionCapsIndependence(
    const PartitionedGroundSet& ground, std::vector<int> caps)
    : ground_(ground),
      caps_(std::move(caps)),
      counts_(static_cast<size_t>(ground.num_groups()), 0) {}

bool PartitionCapsIndependence::CanAdd(Element x) const {
  const auto g = static_cast<size_t>(ground_.group_of(x));
  return counts_[g] < caps_[g];
}

void PartitionCapsIndependence::Add(Element x) {
  ++counts_[static_cast<size_t>(ground_.group_of(x))];
}

FairnessIndependence::FairnessIndependence(const PartitionedGroundSet& ground,
                                           FairnessMatroid m)
    : ground_(ground),
      m_(std::move(m)),
      counts_(static_cast<size_t>(ground.num_groups()), 0) {
  load_ = std::accumulate(m_.l.begin(), m_.l.end(), 0);
}

bool FairnessIndependence::GroupOpen(int group) const {
  const auto g = static_cast<size_t>(group);
  if (counts_[g] + 1 > m_.u[g]) return false;
  const int extra = counts_[g] >= m_.l[g] ? 1 : 0;
  return load_ + extra <= m_.k;
}

bool FairnessIndependence::CanAdd(Element x) const {
  return GroupOpen(ground_.group_of(x));
}

void FairnessIndependence::Add(Element x) {
  const auto g = static_cast<size_t>(ground_.group_of(x));
  if (counts_[g] >= m_.l[g]) ++load_;
  ++counts_[g];
}

KnapsackPartitionIndependence::KnapsackPartitionIndependence(
    const PartitionedGroundSet& ground, const CostVector& costs,
    const PartitionProportions& p, double v)
    : ground_(ground),
      costs_(costs),
      used_(static_cast<size_t>(ground.num_groups()), 0.0) {
  for (int j = 0; j < ground.num_groups(); ++j) cap_.push_back(p[j] * v);
}

bool KnapsackPartitionIndependence::CanAdd(Element x) const {
  const auto g = static_cast<size_t>(ground_.group_of(x));
  return used_[g] + costs_[x] <= cap_[g] + kSumTolerance;
}

void KnapsackPartitionIndependence::Add(Element x) {
  used_[static_cast<size_t>(ground_.group_of(x))] += costs_[x];
}

}  // namespace subcover
