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

#include "subcover/oracle.hpp"

#include <algorithm>

#include "subcover/kernels.hpp"
#include "subcover/objectives.hpp"

namespace subcover {

void GainState::Add(Element x) {
  if (contains(x)) return;
  value_ = AddImpl(x);
  in_set_[static_cast<size_t>(x)] = 1;
  members_.push_back(x);
}

namespace {

class ReevaluationState final : public GainState {
 public:
  explicit ReevaluationState(const Objective& f)
      : GainState(f.size()), f_(f) {
    set_value(f_.Evaluate({}));
  }

 protected:
  double GainImpl(Element x) const override {
    std::vector<Element> s(members().begin(), members().end());
    s.push_back(x);
    return f_.Evaluate(s) - value();
  }
  double AddImpl(Element x) override {
    std::vector<Element> s(members().begin(), members().end());
    s.push_back(x);
    return f_.Evaluate(s);
  }

 private:
  const Objective& f_;
};

}  // namespace

std::unique_ptr<GainState> Objective::NewState() const {
  return NewReevaluationState();
}

std::unique_ptr<GainState> Objective::NewReevaluationState() const {
  return std::make_unique<ReevaluationState>(*this);
}

Session::Session(QueryCountedOracle& oracle, std::span<const Element> initial)
    : oracle_(&oracle), state_(oracle.objective().NewState()) {
  for (Element x : initial) state_->Add(x);
  // Establishing the base value f(S0) is one evaluation.
  oracle_->Charge(1);
}

double Session::Gain(Element x) {
  if (state_->contains(x)) return 0.0;
  oracle_->Charge(1);
  return state_->Gain(x);
}

std::vector<double> Session::Gains(std::span<const Element> pool) {
  std::vector<double> out(pool.size());
  kernels::ScanGains(*state_, pool, out);
  const auto charged = std::count_if(pool.begin(), pool.end(), [&](Element x) {
    return !state_->contains(x);
  });
  oracle_->Charge(charged);
  return out;
}

double marginal_gain(QueryCountedOracle& oracle, double base_value,
                     std::span<const Element> s, Element x) {
  if (std::find(s.begin(), s.end(), x) != s.end()) return 0.0;
  std::vector<Element> grown(s.begin(), s.end());
  grown.push_back(x);
  return oracle.Evaluate(grown) - base_value;
}

}  // namespace subcover
