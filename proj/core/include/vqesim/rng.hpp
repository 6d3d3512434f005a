// Copyright 2026 The vqesim Authors
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

/**
 * @file
 * Seeded random streams.
 *
 * Algorithm: a 64-bit seed is expanded with SplitMix64 into the state of a
 * std::mt19937_64 engine. Uniform doubles take the top 53 bits of one draw,
 * u = (x >> 11) * 2^-53, so u lies in [0, 1). Sub-streams (per trial, per
 * Pauli term) use derive_seed(base, stream), a SplitMix64 mix of both
 * values. Identical seeds always reproduce identical outputs.
 */
#pragma once

#include <cstdint>
#include <random>

namespace vqesim {

/// One SplitMix64 step: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed of sub-stream `stream` of `base`; distinct streams get
/// statistically independent seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on (lo, hi]; used for angles on (−π, π].
  double uniform_left_open(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace vqesim
