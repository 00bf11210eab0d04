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
#include <span>
#include <vector>

namespace subcover {

using Element = std::int32_t;
using ElementSet = std::vector<Element>;

// Elements 0..n-1 split into N non-empty groups. Members of each group are
// kept in ascending order, which is what the lowest-index tie-break relies on.
class PartitionedGroundSet {
 public:
  PartitionedGroundSet() = default;
  explicit PartitionedGroundSet(std::vector<int> group_of);

  // All n elements in one group.
  static PartitionedGroundSet Single(int n);

  int size() const { return static_cast<int>(group_of_.size()); }
  int num_groups() const { return static_cast<int>(members_.size()); }
  int group_of(Element x) const { return group_of_[static_cast<size_t>(x)]; }
  const std::vector<int>& labels() const { return group_of_; }

  std::span<const Element> members(int group) const {
    return members_[static_cast<size_t>(group)];
  }
  std::span<const Element> all() const { return all_; }

  std::vector<int> GroupCounts(std::span<const Element> s) const;
  std::vector<double> GroupCosts(std::span<const Element> s,
                                 std::span<const double> costs) const;

 private:
  std::vector<int> group_of_;
  std::vector<std::vector<Element>> members_;
  std::vector<Element> all_;
};

}  // namespace subcover
