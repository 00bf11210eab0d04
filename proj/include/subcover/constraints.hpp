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

#include <span>
#include <vector>

#include "subcover/ground_set.hpp"

namespace subcover {

inline constexpr double kSumTolerance = 1e-9;

// p_j > 0 with sum 1 (within 1e-9).
class PartitionProportions {
 public:
  explicit PartitionProportions(std::vector<double> p);
  static PartitionProportions Uniform(int groups);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int j) const { return p_[static_cast<size_t>(j)]; }
  const std::vector<double>& values() const { return p_; }
  double min() const;

 private:
  std::vector<double> p_;
};

// Positive per-element costs; c(S) is the plain sum.
class CostVector {
 public:
  explicit CostVector(std::vector<double> c);
  static CostVector Unit(int n) { return CostVector(std::vector<double>(static_cast<size_t>(n), 1.0)); }

  double operator[](Element x) const { return c_[static_cast<size_t>(x)]; }
  const std::vector<double>& values() const { return c_; }
  int size() const { return static_cast<int>(c_.size()); }
  double Sum(std::span<const Element> s) const;
  double min() const;
  double max() const;

 private:
  std::vector<double> c_;
};

// {S : |S ∩ U_c| <= u_c, sum_c max(|S ∩ U_c|, l_c) <= k}.
struct FairnessMatroid {
  std::vector<int> l;
  std::vector<int> u;
  int k = 0;

  // Throws kInvalidParameter unless l_c <= u_c, l_c >= 0 and sum l <= k.
  void Validate() const;
  FairnessMatroid Scaled(int beta) const;
};

bool partition_feasible(std::span<const Element> s,
                        const PartitionedGroundSet& ground,
                        const PartitionProportions& p, double v);

bool knapsack_partition_feasible(std::span<const Element> s,
                                 const PartitionedGroundSet& ground,
                                 const CostVector& costs,
                                 const PartitionProportions& p, double v);

bool fairness_independent(std::span<const Element> s,
                          const PartitionedGroundSet& ground,
                          const FairnessMatroid& m);

bool fairness_beta_member(std::span<const Element> s,
                          const PartitionedGroundSet& ground,
                          const FairnessMatroid& m, int beta);

// l_c = floor(p_lo_c k), u_c = ceil(p_hi_c k). Throws kInfeasibleFairness
// when sum l > k and kInvalidParameter on malformed proportions.
FairnessMatroid fairness_from_proportions(std::span<const double> p_lo,
                                          std::span<const double> p_hi,
                                          int k_guess);

// Incremental independence test used by the greedy loops.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;
  virtual bool CanAdd(Element x) const = 0;
  virtual void Add(Element x) = 0;
};

class PartitionCapsIndependence final : public IndependenceOracle {
 public:
  PartitionCapsIndependence(const PartitionedGroundSet& ground,
                            std::vector<int> caps);
  bool CanAdd(Element x) const override;
  void Add(Element x) override;

 private:
  const PartitionedGroundSet& ground_;
  std::vector<int> caps_;
  std::vector<int> counts_;
};

class FairnessIndependence final : public IndependenceOracle {
 public:
  FairnessIndependence(const PartitionedGroundSet& ground, FairnessMatroid m);
  bool CanAdd(Element x) const override;
  void Add(Element x) override;
  bool GroupOpen(int group) const;

 private:
  const PartitionedGroundSet& ground_;
  FairnessMatroid m_;
  std::vector<int> counts_;
  int load_ = 0;  // sum_c max(count_c, l_c)
};

class KnapsackPartitionIndependence final : public IndependenceOracle {
 public:
  KnapsackPartitionIndependence(const PartitionedGroundSet& ground,
                                const CostVector& costs,
                                const PartitionProportions& p, double v);
  bool CanAdd(Element x) const override;
  void Add(Element x) override;

 private:
  const PartitionedGroundSet& ground_;
  const CostVector& costs_;
  std::vector<double> cap_;
  std::vector<double> used_;
};

}  // namespace subcover
