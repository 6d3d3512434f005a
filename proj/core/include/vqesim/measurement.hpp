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
 * Expectation values of Pauli sums, exact or estimated from shots.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vqesim/density_matrix.hpp"
#include "vqesim/pauli.hpp"
#include "vqesim/statevector.hpp"

namespace vqesim {

/// sum_j h_j <psi|P_j|psi>, evaluated per string from bit parities without
/// building the matrix of h. Throws for non-Hermitian h or width mismatch.
double expectation_exact(const Statevector& psi, const PauliSum& h);
/// sum_j h_j Tr(rho P_j).
double expectation_exact(const DensityMatrix& rho, const PauliSum& h);

/// <psi|A|psi> for an arbitrary (possibly non-Hermitian) Pauli sum.
cplx expectation_complex(const Statevector& psi, const PauliSum& a);

struct SamplingOptions {
  /// Measure qubit-wise commuting terms from one shared set of shots
  /// instead of one independent set per term.
  bool group_qubitwise = false;
};

/// Shot-based estimate. n_shots = 0 returns expectation_exact. Otherwise
/// every non-identity term (or term group) is measured with n_shots fresh
/// samples: rotate X -> Z with H and Y -> Z with RX(pi/2), sample
/// bitstrings, average the parity over the term's support. The stream of
/// term k is seeded with derive_seed(rng_seed, k).
double expectation_sampled(const Statevector& psi, const PauliSum& h,
                           std::size_t n_shots, std::uint64_t rng_seed,
                           SamplingOptions options = {});
double expectation_sampled(const DensityMatrix& rho, const PauliSum& h,
                           std::size_t n_shots, std::uint64_t rng_seed,
                           SamplingOptions options = {});

/// n_shots i.i.d. computational-basis outcomes (bit q = qubit q).
std::vector<std::uint64_t> sample_bitstrings(const Statevector& psi,
                                             std::size_t n_shots,
                                             std::uint64_t rng_seed);
std::vector<std::uint64_t> sample_bitstrings(const DensityMatrix& rho,
                                             std::size_t n_shots,
                                             std::uint64_t rng_seed);

/// Outcome as a string, qubit 0 first ("10" = qubit 0 measured as 1).
std::string format_bitstring(std::uint64_t outcome, std::size_t n_qubits);

/// Greedy partition of term keys into qubit-wise commuting groups, in
/// term order. Identity is excluded.
std::vector<std::vector<PauliKey>> qubitwise_groups(const PauliSum& h);

}  // namespace vqesim
