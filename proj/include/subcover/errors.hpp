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

#include <stdexcept>
#include <string>
#include <string_view>

namespace subcover {

enum class ErrorCode {
  kInvalidProportions,
  kInvalidInstance,
  kInvalidParameter,
  kInvalidCaps,
  kInvalidInput,
  kNumericalDomain,
  kInfeasibleFairness,
  kInfeasibleThreshold,
  kDegenerateBudget,
  kInstanceTooLarge,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidProportions: return "invalid-proportions";
    case ErrorCode::kInvalidInstance: return "invalid-instance";
    case ErrorCode::kInvalidParameter: return "invalid-parameter";
    case ErrorCode::kInvalidCaps: return "invalid-caps";
    case ErrorCode::kInvalidInput: return "invalid-input";
    case ErrorCode::kNumericalDomain: return "numerical-domain";
    case ErrorCode::kInfeasibleFairness: return "infeasible-fairness";
    case ErrorCode::kInfeasibleThreshold: return "infeasible-threshold";
    case ErrorCode::kDegenerateBudget: return "degenerate-budget";
    case ErrorCode::kInstanceTooLarge: return "instance-too-large";
    case ErrorCode::kParse: return "parse-error";
  }
  return "unknown";
}

}  // namespace subcover
