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
 * Exact reference: lowest eigenpair in a particle-number sector, and the
 * spin-summed one-particle reduced density matrix with its natural-orbital
 * occupation numbers (NOONs).
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vqesim/pauli.hpp"
#include "vqesim/statevector.hpp"

namespace vqesim {

struct ExactOptions {
  /// Largest register solved with a dense eigensolver; above it a
  /// restarted Lanczos iteration is used.
  std::size_t dense_qubit_cap = 12;
  /// Hard cap on the register size.
  std::size_t qubit_cap = 16;
  /// Residual target ||H x - E x|| for the iterative solver.
  double lanczos_tolerance = 1e-10;
  std::size_t lanczos_subspace = 60;
  std::size_t lanczos_max_restarts = 500;
};

struct SpectrumResult {
  double ground_energy = 0.0;  ///< includes e_core
  Statevector ground_state;    ///< support only in the sector
  std::size_t sector = 0;      ///< Hamming weight used
  double residual = 0.0;       ///< ||H psi - (E - e_core) psi||
  bool iterative = false;
};

/// Lowest eigenvalue of h restricted to basis states of Hamming weight
/// n_electrons, plus e_core. Throws for an empty sector or beyond the cap.
SpectrumResult ground_state(const PauliSum& h, std::size_t n_electrons,
                            double e_core, const ExactOptions& options = {});

struct OneRdm {
  std::size_t n_spatial = 0;
  /// n x n row-major, D_pq = Σ_σ <a†_{pσ} a_{qσ}> (real part).
  std::vector<double> matrix;
  /// Eigenvalues of D, descending.
  std::vector<double> noons;

  double operator()(std::size_t p, std::size_t q) const {
    return matrix[p * n_spatial + q];
  }
  double trace() const;
};

/// Spin-summed 1-RDM of a state on 2*n_spatial qubits (interleaved spin
/// orbitals), from the JW images of a†_{pσ} a_{qσ}.
OneRdm one_rdm(const Statevector& psi, std::size_t n_spatial);

/// CSV export: header "distortion_parameter,noon_1,...,noon_n" and rows.
std::string noon_csv_header(std::size_t n_noons);
std::string noon_csv_row(double parameter, std::span<const double> noons);

}  // namespace vqesim
