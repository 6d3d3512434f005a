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
 * Spatial-orbital molecular integrals, FCIDUMP ingestion, and active-space
 * reduction (orbital freezing).
 *
 * Two-electron integrals are stored in one of two index orders:
 *  - chemists: (pq|rs) = ∫ φp(1)φq(1) 1/r12 φr(2)φs(2), the FCIDUMP order;
 *  - physicists: h_pqrs = (ps|qr), the order in which
 *    H = Σ h_pq a†_p a_q + ½ Σ h_pqrs a†_p a†_q a_r a_s holds.
 * `MolecularIntegrals::physicist()` gives the second form regardless of the
 * stored convention.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vqesim {

enum class TwoBodyConvention { chemists, physicists };

struct MolecularIntegrals {
  std::size_t n_orbitals = 0;
  std::size_t n_electrons = 0;
  int ms2 = 0;
  double e_core = 0.0;
  /// n×n, row-major.
  std::vector<double> h_one;
  /// n^4, row-major over (p,q,r,s) in `convention` order.
  std::vector<double> h_two;
  TwoBodyConvention convention = TwoBodyConvention::chemists;
  std::optional<std::vector<double>> orbital_energies;
  std::optional<std::vector<double>> noons;

  /// Zero-filled integrals for `n` orbitals.
  static MolecularIntegrals zeros(std::size_t n, std::size_t n_electrons);

  double one(std::size_t p, std::size_t q) const {
    return h_one[p * n_orbitals + q];
  }
  double& one(std::size_t p, std::size_t q) {
    return h_one[p * n_orbitals + q];
  }

  /// Raw stored element.
  double two(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return h_two[((p * n_orbitals + q) * n_orbitals + r) * n_orbitals + s];
  }
  double& two(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return h_two[((p * n_orbitals + q) * n_orbitals + r) * n_orbitals + s];
  }

  /// (pq|rs) regardless of storage.
  double chemist(std::size_t p, std::size_t q, std::size_t r,
                 std::size_t s) const;
  /// h_pqrs = (ps|qr) regardless of storage.
  double physicist(std::size_t p, std::size_t q, std::size_t r,
                   std::size_t s) const;

  /// Copy with the two-body tensor re-indexed into `target` order.
  MolecularIntegrals with_convention(TwoBodyConvention target) const;

  /// Checks the documented invariants, throwing ValidationError.
  void validate(double tol = 1e-10) const;
};

/// Sidecar payload: `{ "noons": [...], "orbital_energies": [...] }`.
struct Sidecar {
  std::optional<std::vector<double>> noons;
  std::optional<std::vector<double>> orbital_energies;
};

Sidecar parse_sidecar_json(std::string_view text);
Sidecar load_sidecar(const std::string& path);

/// Fills absent fields of `m` from the sidecar (sidecar wins when both exist).
void apply_sidecar(MolecularIntegrals& m, const Sidecar& side);

/// Parses an FCIDUMP (header `&FCI NORB=..,NELEC=..,MS2=..` then
/// `value i j k l` records, 1-based, 0 = special).
MolecularIntegrals parse_fcidump(std::string_view text);
MolecularIntegrals load_fcidump(const std::string& path);

/// Writes the unique 8-fold-symmetric records; parse_fcidump(write_fcidump(m))
/// reproduces `m` bit-for-bit.
std::string write_fcidump(const MolecularIntegrals& m);

struct ActiveSpace {
  /// Ascending spatial-orbital indices.
  std::vector<std::size_t> active;
  std::vector<std::size_t> occupied_frozen;
  std::size_t n_active_electrons = 0;

  std::vector<std::size_t> virtual_orbitals(std::size_t n_orbitals) const;
};

/// Threshold selection from natural-orbital occupations:
///   A = {i | n_i ∈ [eps2, 2-eps1]} ∪ {i | n_i ≥ 2-eps1, 2(i+1) ≥ N}
///   O = {i | n_i ≥ 2-eps1, 2(i+1) < N} \ A
/// with 0-based i.
ActiveSpace select_active_space(const MolecularIntegrals& m, double eps1,
                                double eps2);

/// Explicit selection; validates disjointness and electron count.
ActiveSpace make_active_space(const MolecularIntegrals& m,
                              std::vector<std::size_t> active,
                              std::vector<std::size_t> occupied_frozen);

/// Folds the doubly occupied frozen orbitals into h_one and e_core and
/// restricts everything to the active orbitals.
MolecularIntegrals freeze_orbitals(const MolecularIntegrals& m,
                                   const ActiveSpace& a);

}  // namespace vqesim
