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

#include "subcover/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "subcover/errors.hpp"

namespace subcover {
namespace {

std::vector<std::vector<int>> NormalizeTags(std::vector<std::vector<int>> tags,
                                            int universe) {
  for (auto& t : tags) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (int tag : t) {
      if (tag < 0 || tag >= universe) {
        throw Error(ErrorCode::kInvalidInstance,
                    "tag id " + std::to_string(tag) + " outside universe");
      }
    }
  }
  return tags;
}

int UniverseOf(const std::vector<std::vector<int>>& tags) {
  int universe = 0;
  for (const auto& t : tags) {
    for (int tag : t) universe = std::max(universe, tag + 1);
  }
  return universe;
}

class CoverCountState final : public GainState {
 public:
  CoverCountState(const std::vector<std::vector<int>>& tags_of,
                  const std::vector<double>* weight, int universe)
      : GainState(static_cast<int>(tags_of.size())),
        tags_of_(tags_of),
        weight_(weight),
        covered_(static_cast<size_t>(universe), 0) {}

 protected:
  double GainImpl(Element x) const override {
    double gain = 0.0;
    for (int tag : tags_of_[static_cast<size_t>(x)]) {
      if (covered_[static_cast<size_t>(tag)] == 0) {
        gain += weight_ ? (*weight_)[static_cast<size_t>(tag)] : 1.0;
      }
    }
    return gain;
  }
  double AddImpl(Element x) override {
    const double gain = GainImpl(x);
    for (int tag : tags_of_[static_cast<size_t>(x)]) {
      covered_[static_cast<size_t>(tag)] = 1;
    }
    return value() + gain;
  }

 private:
  const std::vector<std::vector<int>>& tags_of_;
  const std::vector<double>* weight_;
  std::vector<char> covered_;
};

double CoverValue(const std::vector<std::vector<int>>& tags_of,
                  const std::vector<double>* weight, int universe,
                  std::span<const Element> s) {
  std::vector<char> covered(static_cast<size_t>(universe), 0);
  for (Element x : s) {
    for (int tag : tags_of[static_cast<size_t>(x)]) {
      covered[static_cast<size_t>(tag)] = 1;
    }
  }
  double total = 0.0;
  for (size_t t = 0; t < covered.size(); ++t) {
    if (covered[t]) total += weight ? (*weight)[t] : 1.0;
  }
  return total;
}

std::vector<char> Membership(int n, std::span<const Element> s) {
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (Element x : s) in[static_cast<size_t>(x)] = 1;
  return in;
}

class CutState final : public GainState {
 public:
  CutState(const WeightedGraph& g, bool coverage)
      : GainState(g.num_nodes()), g_(g), coverage_(coverage) {}

 protected:
  double GainImpl(Element x) const override {
    double gain = 0.0;
    for (const auto& arc : g_.neighbors(x)) {
      if (!contains(arc.to)) {
        gain += arc.w;
      } else if (!coverage_) {
        gain -= arc.w;
      }
    }
    return gain;
  }
  double AddImpl(Element x) override { return value() + GainImpl(x); }

 private:
  const WeightedGraph& g_;
  bool coverage_;
};

class LogDetState final : public GainState {
 public:
  explicit LogDetState(const LogDetObjective& f) : GainState(f.size()), f_(f) {}

 protected:
  double GainImpl(Element x) const override {
    return std::log(Schur(x, nullptr));
  }
  double AddImpl(Element x) override {
    std::vector<double> row;
    const double d = Schur(x, &row);
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw Error(ErrorCode::kNumericalDomain,
                  "I + K_S is not numerically positive definite");
    }
    row.push_back(std::sqrt(d));
    factor_.insert(factor_.end(), row.begin(), row.end());
    return value() + std::log(d);
  }

 private:
  // Schur complement of (I + K) at x given the current Cholesky factor.
  double Schur(Element x, std::vector<double>* z_out) const {
    const auto m = members();
    std::vector<double> z(m.size());
    double norm2 = 0.0;
    size_t row_start = 0;
    for (size_t i = 0; i < m.size(); ++i) {
      double acc = f_.kernel(m[i], x);
      for (size_t k = 0; k < i; ++k) acc -= factor_[row_start + k] * z[k];
      z[i] = acc / factor_[row_start + i];
      norm2 += z[i] * z[i];
      row_start += i + 1;
    }
    const double d = 1.0 + f_.kernel(x, x) - norm2;
    if (z_out) *z_out = std::move(z);
    return d;
  }

  const LogDetObjective& f_;
  std::vector<double> factor_;  // packed lower-triangular rows
};

}  // namespace

SetCoverObjective::SetCoverObjective(std::vector<std::vector<int>> tags_of,
                                     int tag_universe_size)
    : tags_of_(NormalizeTags(std::move(tags_of), tag_universe_size)),
      universe_(tag_universe_size) {}

double SetCoverObjective::Evaluate(std::span<const Element> s) const {
  return CoverValue(tags_of_, nullptr, universe_, s);
}

std::unique_ptr<GainState> SetCoverObjective::NewState() const {
  return std::make_unique<CoverCountState>(tags_of_, nullptr, universe_);
}

WeightedCoverObjective::WeightedCoverObjective(
    std::vector<std::vector<int>> tags_of, std::vector<double> tag_weight)
    : weight_(std::move(tag_weight)) {
  const int universe = std::max(UniverseOf(tags_of), static_cast<int>(weight_.size()));
  if (static_cast<int>(weight_.size()) < universe) {
    throw Error(ErrorCode::kInvalidInstance, "missing tag weights");
  }
  for (double w : weight_) {
    if (!(w >= 0.0)) {
      throw Error(ErrorCode::kInvalidInstance, "negative tag weight");
    }
  }
  tags_of_ = NormalizeTags(std::move(tags_of), universe);
}

double WeightedCoverObjective::Evaluate(std::span<const Element> s) const {
  return CoverValue(tags_of_, &weight_, static_cast<int>(weight_.size()), s);
}

std::unique_ptr<GainState> WeightedCoverObjective::NewState() const {
  return std::make_unique<CoverCountState>(tags_of_, &weight_,
                                           static_cast<int>(weight_.size()));
}

WeightedGraph::WeightedGraph(int n, std::span<const Edge> edges) : n_(n) {
  if (n <= 0) throw Error(ErrorCode::kInvalidInstance, "graph has no nodes");
  std::map<std::pair<Element, Element>, double> merged;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidInstance, "edge endpoint out of range");
    }
    if (!(e.w >= 0.0)) {
      throw Error(ErrorCode::kInvalidInstance, "negative edge weight");
    }
    if (e.u == e.v) continue;
    merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.w;
  }
  adjacency_.resize(static_cast<size_t>(n));
  for (const auto& [key, w] : merged) {
    edges_.push_back({key.first, key.second, w});
    adjacency_[static_cast<size_t>(key.first)].push_back({key.second, w});
    adjacency_[static_cast<size_t>(key.second)].push_back({key.first, w});
  }
}

double GraphCutObjective::Evaluate(std::span<const Element> s) const {
  const std::vector<char> in = Membership(graph_.num_nodes(), s);
  double total = 0.0;
  for (const Edge& e : graph_.edges()) {
    if (in[static_cast<size_t>(e.u)] != in[static_cast<size_t>(e.v)]) total += e.w;
  }
  return total;
}

std::unique_ptr<GainState> GraphCutObjective::NewState() const {
  return std::make_unique<CutState>(graph_, false);
}

double VertexCoverageObjective::Evaluate(std::span<const Element> s) const {
  const std::vector<char> in = Membership(graph_.num_nodes(), s);
  double total = 0.0;
  for (const Edge& e : graph_.edges()) {
    if (in[static_cast<size_t>(e.u)] || in[static_cast<size_t>(e.v)]) total += e.w;
  }
  return total;
}

std::unique_ptr<GainState> VertexCoverageObjective::NewState() const {
  return std::make_unique<CutState>(graph_, true);
}

LogDetObjective::LogDetObjective(int n, std::vector<double> kernel)
    : n_(n), kernel_(std::move(kernel)) {
  if (n <= 0 || kernel_.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw Error(ErrorCode::kInvalidInstance, "kernel must be n x n");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (this->kernel(i, j) != this->kernel(j, i)) {
        throw Error(ErrorCode::kInvalidInstance, "kernel must be symmetric");
      }
    }
  }
}

double LogDetObjective::Evaluate(std::span<const Element> s) const {
  if (s.empty()) return 0.0;
  const auto m = static_cast<Eigen::Index>(s.size());
  Eigen::MatrixXd a(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      a(i, j) = kernel(s[static_cast<size_t>(i)], s[static_cast<size_t>(j)]);
    }
    a(i, i) += 1.0;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    a.diagonal().array() += 1e-10;
    llt.compute(a);
    if (llt.info() != Eigen::Success) {
      throw Error(ErrorCode::kNumericalDomain,
                  "I + K_S is not numerically positive definite");
    }
  }
  const Eigen::MatrixXd l = llt.matrixL();
  return 2.0 * l.diagonal().array().log().sum();
}

std::unique_ptr<GainState> LogDetObjective::NewState() const {
  return std::make_unique<LogDetState>(*this);
}

std::vector<double> build_gaussian_kernel(
    const std::vector<std::vector<double>>& features, double sigma) {
  if (!(sigma > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "sigma must be positive");
  }
  const size_t n = features.size();
  for (const auto& f : features) {
    if (f.size() != features.front().size()) {
      throw Error(ErrorCode::kInvalidParameter,
                  "feature vectors must share one dimension");
    }
  }
  std::vector<double> k(n * n, 1.0);
  const double s2 = sigma * sigma;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      double d2 = 0.0;
      for (size_t c = 0; c < features[i].size(); ++c) {
        const double diff = features[i][c] - features[j][c];
        d2 += diff * diff;
      }
      k[i * n + j] = k[j * n + i] = std::exp(-d2 / s2);
    }
  }
  return k;
}

}  // namespace subcover
