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
 * Second-quantized fermion operators and the Jordan-Wigner mapping.
 *
 * Spin orbitals are interleaved: spatial orbital p maps to spin orbitals
 * 2p (alpha) and 2p+1 (beta). Spin orbital j maps to qubit j.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "vqesim/integrals.hpp"
#include "vqesim/pauli.hpp"

namespace vqesim {

struct LadderOp {
  std::size_t mode = 0;
  bool dagger = false;

  friend auto operator<=>(const LadderOp&, const LadderOp&) = default;
};

inline LadderOp cre(std::size_t mode) { return {mode, true}; }
inline LadderOp ann(std::size_t mode) { return {mode, false}; }

struct FermionTerm {
  cplx coeff{1.0, 0.0};
  std::vector<LadderOp> ops;
};

/// Sum of products of ladder operators, kept as an unmerged term list.
/// normal_ordered() gives the canonical merged form used for comparisons.
class FermionOperator {
 public:
  FermionOperator() = default;
  explicit FermionOperator(std::size_t n_modes) : n_modes_(n_modes) {}

  std::size_t n_modes() const noexcept { return n_modes_; }
  const std::vector<FermionTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(cplx coeff, std::vector<LadderOp> ops);

  FermionOperator adjoint() const;
  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator*=(cplx scale);

  /// Creation operators left of annihilation operators, each group in
  /// descending mode order; equal products merged, |c| < tol dropped.
  FermionOperator normal_ordered(double tol = 1e-14) const;

  /// Zero operator after normal ordering.
  bool is_zero(double tol = 1e-12) const;
  bool is_hermitian(double tol = 1e-12) const;
  bool is_anti_hermitian(double tol = 1e-12) const;

  std::string str() const;

 private:
  std::size_t n_modes_ = 0;
  std::vector<FermionTerm> terms_;
};

FermionOperator operator+(const FermionOperator& a, const FermionOperator& b);
FermionOperator operator-(const FermionOperator& a, const FermionOperator& b);

inline std::size_t spin_orbital(std::size_t spatial, int spin) {
  return 2 * spatial + static_cast<std::size_t>(spin);
}

/// H = Σ h_pq a†_p a_q + ½ Σ h_pqrs a†_p a†_q a_r a_s over spin orbitals.
/// Products that vanish identically (a†_P a†_P, a_R a_R) and zero
/// integrals are skipped; the constant e_core is not included.
FermionOperator build_hamiltonian(const MolecularIntegrals& m);

/// JW image of one ladder operator on `n_qubits`.
PauliSum jordan_wigner(const LadderOp& op, std::size_t n_qubits);

PauliSum jordan_wigner(const FermionOperator& f);

/// Convenience: JW(build_hamiltonian(m)) with real coefficients.
PauliSum qubit_hamiltonian(const MolecularIntegrals& m);

/// N̂ = Σ_j (I − Z_j)/2.
PauliSum number_operator(std::size_t n_qubits);

}  // namespace vqesim
