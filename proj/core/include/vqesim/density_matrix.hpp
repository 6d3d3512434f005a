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
 * Mixed-state simulation engine.
 *
 * rho is stored row-major, rho(r, c) = data[r * dim + c]. Viewed as a
 * vector on 2n qubits, column bits are qubits 0..n-1 and row bits are
 * qubits n..2n-1, so U rho U^dagger applies U to the row bits and conj(U)
 * to the column bits.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vqesim/circuit.hpp"
#include "vqesim/pauli.hpp"
#include "vqesim/statevector.hpp"

namespace vqesim {

inline constexpr std::size_t kDefaultDensityMatrixQubitCap = 12;

class DensityMatrix {
 public:
  DensityMatrix() = default;

  /// |0...0><0...0|; throws CapacityError above `qubit_cap`.
  static DensityMatrix zero(std::size_t n_qubits,
                            std::size_t qubit_cap = kDefaultDensityMatrixQubitCap);
  /// |psi><psi|.
  static DensityMatrix from_statevector(
      const Statevector& psi,
      std::size_t qubit_cap = kDefaultDensityMatrixQubitCap);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<cplx>& data() const noexcept { return data_; }
  cplx operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  /// rho <- U rho U^dagger for one bound gate.
  void apply(const Gate& g);
  void apply(const ParameterizedCircuit& c);

  /// rho <- sum_k E_k rho E_k^dagger on qubit q.
  void apply_kraus(std::size_t q, std::span<const Mat2> kraus);

  /// Composition of amplitude damping (probability p_amp) and pure
  /// dephasing (probability p_phase) on qubit q, in closed form. Equal to
  /// apply_kraus with the two Kraus pairs; the channels commute.
  void apply_idle(std::size_t q, double p_amp, double p_phase);

  cplx trace() const;
  bool is_hermitian(double tol = 1e-10) const;
  /// Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue() const;
  /// Diagonal of rho (real parts).
  std::vector<double> probabilities() const;

 private:
  std::size_t n_qubits_ = 0;
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

}  // namespace vqesim
