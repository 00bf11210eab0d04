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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "subcover/oracle.hpp"

namespace subcover {

// f(S) = |union of tags_of(s)|. Monotone.
class SetCoverObjective final : public Objective {
 public:
  SetCoverObjective(std::vector<std::vector<int>> tags_of, int tag_universe_size);

  int size() const override { return static_cast<int>(tags_of_.size()); }
  double Evaluate(std::span<const Element> s) const override;
  bool monotone() const override { return true; }
  std::unique_ptr<GainState> NewState() const override;

  const std::vector<std::vector<int>>& tags_of() const { return tags_of_; }
  int tag_universe_size() const { return universe_; }

 private:
  std::vector<std::vector<int>> tags_of_;
  int universe_;
};

// f(S) = total weight of the covered tags. Monotone.
class WeightedCoverObjective final : public Objective {
 public:
  WeightedCoverObjective(std::vector<std::vector<int>> tags_of,
                         std::vector<double> tag_weight);

  int size() const override { return static_cast<int>(tags_of_.size()); }
  double Evaluate(std::span<const Element> s) const override;
  bool monotone() const override { return true; }
  std::unique_ptr<GainState> NewState() const override;

  const std::vector<std::vector<int>>& tags_of() const { return tags_of_; }
  const std::vector<double>& tag_weight() const { return weight_; }

 private:
  std::vector<std::vector<int>> tags_of_;
  std::vector<double> weight_;
};

struct Edge {
  Element u = 0;
  Element v = 0;
  double w = 1.0;
};

// Undirected weighted graph with merged duplicates and no self-loops.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  // Throws kInvalidInstance on negative weights or out-of-range endpoints.
  WeightedGraph(int n, std::span<const Edge> edges);

  int num_nodes() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  struct Arc {
    Element to;
    double w;
  };
  std::span<const Arc> neighbors(Element x) const {
    return adjacency_[static_cast<size_t>(x)];
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // u < v, sorted
  std::vector<std::vector<Arc>> adjacency_;
};

// f(S) = weight of edges with exactly one endpoint in S. Not monotone.
class GraphCutObjective final : public Objective {
 public:
  explicit GraphCutObjective(WeightedGraph graph) : graph_(std::move(graph)) {}

  int size() const override { return graph_.num_nodes(); }
  double Evaluate(std::span<const Element> s) const override;
  bool monotone() const override { return false; }
  std::unique_ptr<GainState> NewState() const override;
  const WeightedGraph& graph() const { return graph_; }

 private:
  WeightedGraph graph_;
};

// f(S) = weight of edges with at least one endpoint in S. Monotone.
class VertexCoverageObjective final : public Objective {
 public:
  explicit VertexCoverageObjective(WeightedGraph graph)
      : graph_(std::move(graph)) {}

  int size() const override { return graph_.num_nodes(); }
  double Evaluate(std::span<const Element> s) const override;
  bool monotone() const override { return true; }
  std::unique_ptr<GainState> NewState() const override;
  const WeightedGraph& graph() const { return graph_; }

 private:
  WeightedGraph graph_;
};

// f(S) = log det(I + K_S) for a PSD kernel K (row-major, n x n). Monotone.
class LogDetObjective final : public Objective {
 public:
  LogDetObjective(int n, std::vector<double> kernel);

  int size() const override { return n_; }
  double Evaluate(std::span<const Element> s) const override;
  bool monotone() const override { return true; }
  std::unique_ptr<GainState> NewState() const override;

  double kernel(Element i, Element j) const {
    return kernel_[static_cast<size_t>(i) * static_cast<size_t>(n_) +
                   static_cast<size_t>(j)];
  }
  const std::vector<double>& kernel_data() const { return kernel_; }

 private:
  int n_;
  std::vector<double> kernel_;
};

// K_ij = exp(-||x_i - x_j||^2 / sigma^2), row-major.
std::vector<double> build_gaussian_kernel(
    const std::vector<std::vector<double>>& features, double sigma);

}  // namespace subcover
