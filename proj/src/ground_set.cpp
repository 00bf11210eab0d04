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

#include "subcover/ground_set.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "subcover/errors.hpp"

namespace subcover {

PartitionedGroundSet::PartitionedGroundSet(std::vector<int> group_of)
    : group_of_(std::move(group_of)) {
  if (group_of_.empty()) {
    throw Error(ErrorCode::kInvalidInstance, "ground set must be non-empty");
  }
  const int max_label = *std::max_element(group_of_.begin(), group_of_.end());
  if (*std::min_element(group_of_.begin(), group_of_.end()) < 0) {
    throw Error(ErrorCode::kInvalidInstance, "negative group label");
  }
  members_.resize(static_cast<size_t>(max_label) + 1);
  for (size_t x = 0; x < group_of_.size(); ++x) {
    members_[static_cast<size_t>(group_of_[x])].push_back(static_cast<Element>(x));
  }
  for (size_t g = 0; g < members_.size(); ++g) {
    if (members_[g].empty()) {
      throw Error(ErrorCode::kInvalidInstance,
                  "group " + std::to_string(g) + " has no elements");
    }
  }
  all_.resize(group_of_.size());
  std::iota(all_.begin(), all_.end(), 0);
}

PartitionedGroundSet PartitionedGroundSet::Single(int n) {
  return PartitionedGroundSet(std::vector<int>(static_cast<size_t>(n), 0));
}

std::vector<int> PartitionedGroundSet::GroupCounts(
    std::span<const Element> s) const {
  std::vector<int> counts(members_.size(), 0);
  for (Element x : s) ++counts[static_cast<size_t>(group_of(x))];
  return counts;
}

std::vector<double> PartitionedGroundSet::GroupCosts(
    std::span<const Element> s, std::span<const double> costs) const {
  std::vector<double> totals(members_.size(), 0.0);
  for (Element x : s) {
    totals[static_cast<size_t>(group_of(x))] +=
        costs.empty() ? 1.0 : costs[static_cast<size_t>(x)];
  }
  return totals;
}

}  // namespace subcover
