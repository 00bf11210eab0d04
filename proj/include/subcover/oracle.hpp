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
#include <memory>
#include <span>
#include <vector>

#include "subcover/ground_set.hpp"

namespace subcover {

class Objective;

// Incremental view of f around a growing set S. Gain() must be safe to call
// concurrently from several threads while no Add() is in flight.
class GainState {
 public:
  explicit GainState(int n) : in_set_(static_cast<size_t>(n), 0) {}
  virtual ~GainState() = default;

  double value() const { return value_; }
  bool contains(Element x) const { return in_set_[static_cast<size_t>(x)] != 0; }
  // Insertion order.
  std::span<const Element> members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

  // f(S + x) - f(S); zero for members.
  double Gain(Element x) const { return contains(x) ? 0.0 : GainImpl(x); }
  void Add(Element x);

 protected:
  virtual double GainImpl(Element x) const = 0;
  // Called before x is recorded as a member; returns f(S + x).
  virtual double AddImpl(Element x) = 0;

  void set_value(double v) { value_ = v; }

 private:
  double value_ = 0.0;
  std::vector<char> in_set_;
  std::vector<Element> members_;
};

class Objective {
 public:
  virtual ~Objective() = default;

  virtual int size() const = 0;
  virtual double Evaluate(std::span<const Element> s) const = 0;
  virtual bool monotone() const = 0;

  // Fast incremental state. The default re-evaluates f on S + x.
  virtual std::unique_ptr<GainState> NewState() const;
  // Reference state that always re-evaluates; kept for cross-checks.
  std::unique_ptr<GainState> NewReevaluationState() const;
};

// Wraps an objective and tallies every evaluation of f. Marginal gains against
// a cached base value count as one query each.
class QueryCountedOracle {
 public:
  explicit QueryCountedOracle(const Objective& f) : f_(&f) {}

  const Objective& objective() const { return *f_; }
  int size() const { return f_->size(); }

  double Evaluate(std::span<const Element> s) {
    ++queries_;
    return f_->Evaluate(s);
  }
  std::int64_t queries() const { return queries_; }
  void Charge(std::int64_t n) { queries_ += n; }

 private:
  const Objective* f_;
  std::int64_t queries_ = 0;
};

// Greedy working set bound to an oracle; all gain queries are charged there.
class Session {
 public:
  explicit Session(QueryCountedOracle& oracle,
                   std::span<const Element> initial = {});

  double value() const { return state_->value(); }
  bool contains(Element x) const { return state_->contains(x); }
  std::span<const Element> members() const { return state_->members(); }
  int size() const { return state_->size(); }
  const GainState& state() const { return *state_; }
  QueryCountedOracle& oracle() { return *oracle_; }

  double Gain(Element x);
  // Gains for every pool element, charged one query per non-member.
  std::vector<double> Gains(std::span<const Element> pool);
  void Add(Element x) { state_->Add(x); }

 private:
  QueryCountedOracle* oracle_;
  std::unique_ptr<GainState> state_;
};

// f(S + x) - base_value by re-evaluation; members cost nothing and return 0.
double marginal_gain(QueryCountedOracle& oracle, double base_value,
                     std::span<const Element> s, Element x);

}  // namespace subcover
