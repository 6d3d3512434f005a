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
 * Pauli strings and weighted sums of Pauli strings.
 *
 * Qubit ordering: qubit 0 is the least significant bit of a basis-state
 * index. Letter strings are written with qubit 0 leftmost, so "XI" on two
 * qubits is X acting on qubit 0. Dense matrices are therefore
 * q_{n-1} (x) ... (x) q_0 in the usual Kronecker sense.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vqesim {

using cplx = std::complex<double>;

/// Coefficients with magnitude below this are dropped by PauliSum.
inline constexpr double kPauliPruneTolerance = 1e-14;

/// Largest register a PauliString can describe (two 64-bit masks).
inline constexpr std::size_t kMaxPauliQubits = 64;

/// Symplectic encoding of a phase-free Pauli word: letter on qubit q is
/// I (x=0,z=0), X (1,0), Z (0,1) or Y (1,1).
struct PauliKey {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  friend auto operator<=>(const PauliKey&, const PauliKey&) = default;

  std::uint64_t support() const noexcept { return x | z; }
  bool is_identity() const noexcept { return (x | z) == 0; }
};

/// A single Pauli string with phase in {+1, +i, -1, -i}.
class PauliString {
 public:
  PauliString() = default;

  /// Identity on `n_qubits` qubits.
  explicit PauliString(std::size_t n_qubits);
  PauliString(std::size_t n_qubits, PauliKey key, int phase_power = 0);

  /// Parses letters like "XIZY" (qubit 0 first) with optional sign prefix
  /// "+", "-", "i", "-i".
  static PauliString from_letters(std::string_view text);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const PauliKey& key() const noexcept { return key_; }

  /// Phase is i^phase_power(), phase_power in [0, 4).
  int phase_power() const noexcept { return phase_power_; }
  cplx phase() const noexcept;

  char letter(std::size_t qubit) const;
  std::string letters() const;

  /// "+XZ", "-iYI", ...
  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_qubits_ = 0;
  PauliKey key_{};
  int phase_power_ = 0;
};

/// Operator product a·b, including the accumulated phase.
PauliString multiply(const PauliString& a, const PauliString& b);

/// Phase exponent k such that P_a P_b = i^k P_{a xor b} for phase-free words.
int product_phase_power(const PauliKey& a, const PauliKey& b) noexcept;

/// Row-major dense complex matrix.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<cplx> data;

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t d) : dim(d), data(d * d) {}

  cplx& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data[r * dim + c];
  }
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

/// Weighted sum of phase-free Pauli words. Immutable by convention once
/// built; terms are kept in a deterministic (key-ordered) map.
class PauliSum {
 public:
  using TermMap = std::map<PauliKey, cplx>;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits);
  PauliSum(const PauliString& p, cplx coeff = 1.0);

  /// Parses `{"XI": 0.5, ...}`-style pairs; letters must share one length.
  static PauliSum from_terms(
      std::size_t n_qubits,
      const std::vector<std::pair<std::string, cplx>>& terms);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of the word, zero when absent.
  cplx coefficient(std::string_view letters) const;
  cplx coefficient(const PauliKey& key) const;

  /// Accumulates without pruning; call simplify() afterwards.
  void accumulate(const PauliKey& key, cplx coeff);
  void accumulate(const PauliString& p, cplx coeff);

  /// Drops coefficients with |c| < tol.
  void simplify(double tol = kPauliPruneTolerance);

  /// All coefficients real to `tol`.
  bool is_hermitian(double tol = 1e-12) const;

  PauliSum adjoint() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(cplx scale);

  /// Text rendering, one `<coeff> <letters>` line per term.
  std::string to_text() const;
  static PauliSum from_text(std::string_view text);

 private:
  std::size_t n_qubits_ = 0;
  TermMap terms_;
};

/// Coefficient-wise merge; terms below the prune tolerance are dropped.
PauliSum add(const PauliSum& a, const PauliSum& b);

/// Operator product, expanded and simplified.
PauliSum multiply(const PauliSum& a, const PauliSum& b);

PauliSum operator+(const PauliSum& a, const PauliSum& b);
PauliSum operator*(const PauliSum& a, const PauliSum& b);
PauliSum operator*(cplx scale, const PauliSum& a);

/// Default cap on dense matrix materialization.
inline constexpr std::size_t kDefaultMatrixQubitCap = 16;

DenseMatrix to_matrix(const PauliString& p,
                      std::size_t qubit_cap = kDefaultMatrixQubitCap);
DenseMatrix to_matrix(const PauliSum& s,
                      std::size_t qubit_cap = kDefaultMatrixQubitCap);

/// Action of a phase-free word on a basis state: P|b> = value * |b ^ key.x>.
inline cplx pauli_basis_action(const PauliKey& key, std::uint64_t basis) {
  static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int y_count = __builtin_popcountll(key.x & key.z);
  const int z_sign = __builtin_popcountll(key.z & basis) & 1;
  return kIPow[(y_count + 2 * z_sign) & 3];
}

/// Letters of a key on `n_qubits`, qubit 0 first.
std::string key_letters(const PauliKey& key, std::size_t n_qubits);
PauliKey key_from_letters(std::string_view letters);

}  // namespace vqesim
