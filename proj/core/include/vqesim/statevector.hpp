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
 * Pure-state simulation engine.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vqesim/circuit.hpp"
#include "vqesim/pauli.hpp"

namespace vqesim {

inline constexpr std::size_t kDefaultStatevectorQubitCap = 24;

class Statevector {
 public:
  Statevector() = default;

  /// |0...0> on n qubits; throws CapacityError above `qubit_cap`.
  static Statevector zero(std::size_t n_qubits,
                          std::size_t qubit_cap = kDefaultStatevectorQubitCap);
  /// Computational basis state |index>.
  static Statevector basis(std::size_t n_qubits, std::uint64_t index);
  /// Validates length 2^n and unit norm (to 1e-12).
  static Statevector from_amplitudes(std::vector<cplx> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const noexcept { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;
  /// Rescales to unit norm. Unitary gates preserve the norm exactly only in
  /// exact arithmetic; long circuits of basis changes (H·H, RX(π/2)·RX(−π/2))
  /// accumulate a coherent 1-ulp-per-pair growth that this removes.
  void normalize();

  /// Applies one bound gate in place.
  void apply(const Gate& g);
  /// Applies every gate of a bound circuit of the same width.
  void apply(const ParameterizedCircuit& c);
  /// Applies exp(-i angle P / 2) for a Hermitian Pauli word P.
  void apply_pauli_rotation(const PauliKey& key, double angle);

  /// Born probabilities |a_i|^2.
  std::vector<double> probabilities() const;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<cplx> amps_;
};

/// |psi> = U_c |0...0>, renormalized once at the end to remove rounding
/// drift. Throws ValidationError for unbound parameters and CapacityError
/// above `qubit_cap`.
Statevector run_statevector(const ParameterizedCircuit& c,
                            std::size_t qubit_cap = kDefaultStatevectorQubitCap);

}  // namespace vqesim
