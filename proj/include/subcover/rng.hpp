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
#include <random>

namespace subcover {

// Reproducible random stream identified by (seed, stream_id).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Child stream; deterministic in (seed, this stream, id).
  SeededRng Fork(std::uint64_t id) const;

  // Uniform integer in [0, k). k must be positive.
  std::uint64_t UniformIndex(std::uint64_t k);
  // Uniform real in [lo, hi].
  double Uniform(double lo, double hi);
  std::uint64_t Next() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

inline SeededRng fork_rng(const SeededRng& rng, std::uint64_t stream_id) {
  return rng.Fork(stream_id);
}

}  // namespace subcover
