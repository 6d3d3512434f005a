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
 * Parameterized trial circuits: hardware-efficient layouts and the
 * first-order Trotterized unitary coupled-cluster (qUCC) circuit.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vqesim/circuit.hpp"
#include "vqesim/fermion.hpp"
#include "vqesim/integrals.hpp"
#include "vqesim/statevector.hpp"

namespace vqesim {

enum class HeVariant { v1, v2, v3 };

HeVariant he_variant_from_name(std::string_view name);

/// d*N for v1/v2, 2d(3N-2) for v3.
std::size_t he_parameter_count(HeVariant v, std::size_t n_qubits,
                               std::size_t depth);

/// Hardware-efficient circuit (RY on even / RX on odd qubits for v1/v2):
///  - v1: H on qubits 0..N/2-1; per layer rotations, then CNOT(i, i+N/2)
///        for i < N/2, then CNOT(2k, 2k+1). Requires even N.
///  - v2: H on all qubits; per layer rotations, then CNOT(i, i+1).
///  - v3: H on all qubits; per layer (RY, RX) on every qubit, then for
///        each i < N-1: CNOT(i, i+1) followed by (RY, RX) on i and i+1.
ParameterizedCircuit build_he(HeVariant variant, std::size_t n_qubits,
                              std::size_t depth);

/// One qUCC excitation. Singles: a†_p a_r − a†_r a_p with p unoccupied and
/// r occupied in the reference. Doubles: a†_p a†_q a_r a_s − a†_r a†_s a_p a_q
/// with p > q unoccupied and r > s occupied. Indices are spin orbitals.
struct Excitation {
  std::vector<std::size_t> to;    ///< p (, q)
  std::vector<std::size_t> from;  ///< r (, s)

  bool is_double() const { return to.size() == 2; }
  /// The anti-Hermitian operator G_k on `n_modes` modes.
  FermionOperator generator(std::size_t n_modes) const;
  std::string label() const;

  friend auto operator<=>(const Excitation&, const Excitation&) = default;
};

struct QuccAmplitudes {
  std::map<std::pair<std::size_t, std::size_t>, double> singles;  ///< (p, r)
  std::map<std::array<std::size_t, 4>, double> doubles;  ///< (p, q, r, s)
  std::vector<std::string> warnings;

  /// Disjoint index sets and finite values.
  void validate() const;
};

struct QuccOptions {
  /// Keep only excitations that conserve the spin projection. Off by
  /// default: every (unoccupied, occupied) pair gets a single excitation and
  /// every pair of pairs a double.
  bool spin_conserving = false;
};

/// T(θ) = Σ_k θ_k G_k over all singles and doubles between the reference
/// occupied set O' (the lowest n_electrons spin orbitals) and the rest I'.
/// Parameter k corresponds to excitations[k]; doubles come first, then
/// singles, each in lexicographic order, which is also the Trotter order.
struct QuccGenerator {
  std::size_t n_qubits = 0;
  std::size_t n_electrons = 0;
  std::vector<Excitation> excitations;

  std::size_t n_parameters() const { return excitations.size(); }
  std::vector<std::size_t> occupied() const;
  std::vector<std::size_t> unoccupied() const;

  /// Σ_k θ_k G_k as a fermion operator.
  FermionOperator operator_at(std::span<const double> theta) const;
  /// θ vector from amplitude maps (absent entries are 0).
  std::vector<double> theta_from(const QuccAmplitudes& amps) const;
};

QuccGenerator build_qucc_generator(std::size_t n_spin_orbitals,
                                   std::size_t n_electrons,
                                   QuccOptions options = {});
/// Generator for frozen (active-space) integrals: 2n spin orbitals,
/// n_electrons active electrons.
QuccGenerator build_qucc_generator(const MolecularIntegrals& frozen,
                                   QuccOptions options = {});

/// Second-order amplitudes: singles 0, doubles
/// θ_pq^rs = (h_pqrs − h_pqsr) / (ε_r + ε_s − ε_p − ε_q) with spin-orbital
/// physicists' integrals. A denominator below 1e-10 in magnitude yields 0
/// and a warning. Requires orbital energies.
QuccAmplitudes mp2_initial_amplitudes(const MolecularIntegrals& frozen,
                                      const QuccGenerator& generator);

/// X on the n_electrons lowest qubits.
ParameterizedCircuit hartree_fock_circuit(std::size_t n_qubits,
                                          std::size_t n_electrons);

/// exp(θ_k G_k) factors in generator order, each expanded through the JW
/// image Σ_j i c_j P_j into exp(i c_j θ_k P_j) = RZ(−2 c_j θ_k) conjugated by
/// basis changes (H for X, RX(π/2) for Y) and a CNOT staircase, after the
/// Hartree-Fock preparation. Throws for a non-anti-Hermitian generator.
ParameterizedCircuit trotterize_qucc(const QuccGenerator& g, int order = 1);

/// Pauli-exponential subcircuit exp(−i (angle/2) P) for a Hermitian word.
ParameterizedCircuit pauli_exponential(const PauliKey& key,
                                       std::size_t n_qubits,
                                       GateParameter angle);

/// Sequence of Pauli rotations exp(−i (scale·θ_index / 2) P) applied after
/// X on `initial_x_mask`. Built from the same JW expansion as the Trotter
/// circuit and equal to it as a unitary; used as the fast noiseless path.
struct PauliRotationProgram {
  struct Rotation {
    PauliKey key;
    std::size_t index = 0;
    double scale = 1.0;
  };
  std::size_t n_qubits = 0;
  std::size_t n_parameters = 0;
  std::uint64_t initial_x_mask = 0;
  std::vector<Rotation> rotations;

  Statevector run(std::span<const double> theta) const;
};

PauliRotationProgram qucc_rotation_program(const QuccGenerator& g);

}  // namespace vqesim
