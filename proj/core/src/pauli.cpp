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

#include "vqesim/pauli.hpp"

#include <fmt/format.h>

#include <cmath>
#include <sstream>

#include "vqesim/error.hpp"

namespace vqesim {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int popcount(std::uint64_t v) { return __builtin_popcountll(v); }

void check_qubits(std::size_t n) {
  if (n == 0) throw ValidationError("Pauli objects need at least one qubit");
  if (n > kMaxPauliQubits) {
    throw CapacityError(fmt::format(
        "{} qubits exceeds the Pauli encoding limit of {}", n,
        kMaxPauliQubits));
  }
}

std::uint64_t qubit_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

double parse_double(std::string_view tok) {
  // std::from_chars for double is not reliable on every libstdc++ we target.
  std::string s(tok);
  std::size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size()) throw ValidationError("bad number '" + s + "'");
  return v;
}

std::string format_coeff(cplx c) {
  if (c.imag() == 0.0) return fmt::format("{}", c.real());
  return fmt::format("({},{})", c.real(), c.imag());
}

cplx parse_coeff(std::string_view tok) {
  if (!tok.empty() && tok.front() == '(') {
    if (tok.back() != ')') throw ValidationError("bad complex coefficient");
    auto body = tok.substr(1, tok.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      throw ValidationError("bad complex coefficient");
    }
    return {parse_double(body.substr(0, comma)),
            parse_double(body.substr(comma + 1))};
  }
  return {parse_double(tok), 0.0};
}

}  // namespace

std::string key_letters(const PauliKey& key, std::size_t n_qubits) {
  std::string out(n_qubits, 'I');
  for (std::size_t q = 0; q < n_qubits; ++q) {
    const bool x = (key.x >> q) & 1U;
    const bool z = (key.z >> q) & 1U;
    out[q] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

PauliKey key_from_letters(std::string_view letters) {
  check_qubits(letters.size());
  PauliKey key;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (letters[q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        key.x |= bit;
        break;
      case 'Y':
        key.x |= bit;
        key.z |= bit;
        break;
      case 'Z':
        key.z |= bit;
        break;
      default:
        throw ValidationError(
            fmt::format("invalid Pauli letter '{}'", letters[q]));
    }
  }
  return key;
}

int product_phase_power(const PauliKey& a, const PauliKey& b) noexcept {
  // P = i^{|x&z|} X^x Z^z; commuting Z^{z_a} past X^{x_b} costs (-1)^{z_a.x_b}.
  const PauliKey c{a.x ^ b.x, a.z ^ b.z};
  const int k = popcount(a.x & a.z) + popcount(b.x & b.z) +
                2 * popcount(a.z & b.x) - popcount(c.x & c.z);
  return ((k % 4) + 4) % 4;
}

PauliString::PauliString(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
}

PauliString::PauliString(std::size_t n_qubits, PauliKey key, int phase_power)
    : n_qubits_(n_qubits), key_(key), phase_power_(((phase_power % 4) + 4) % 4) {
  check_qubits(n_qubits);
  if ((key.support() & ~qubit_mask(n_qubits)) != 0) {
    throw ValidationError("Pauli key has letters beyond n_qubits");
  }
}

PauliString PauliString::from_letters(std::string_view text) {
  int phase = 0;
  if (text.starts_with("-i")) {
    phase = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("+i")) {
    phase = 1;
    text.remove_prefix(2);
  } else if (text.starts_with("i")) {
    phase = 1;
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    phase = 2;
    text.remove_prefix(1);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  }
  return PauliString(text.size(), key_from_letters(text), phase);
}

cplx PauliString::phase() const noexcept { return kIPow[phase_power_]; }

char PauliString::letter(std::size_t qubit) const {
  if (qubit >= n_qubits_) throw ValidationError("qubit index out of range");
  return key_letters(key_, n_qubits_)[qubit];
}

std::string PauliString::letters() const {
  return key_letters(key_, n_qubits_);
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_power_] + letters();
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ValidationError(fmt::format("Pauli size mismatch: {} vs {} qubits",
                                      a.n_qubits(), b.n_qubits()));
  }
  const PauliKey c{a.key().x ^ b.key().x, a.key().z ^ b.key().z};
  return PauliString(a.n_qubits(), c,
                     a.phase_power() + b.phase_power() +
                         product_phase_power(a.key(), b.key()));
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim != b.dim) throw ValidationError("matrix dimension mismatch");
  DenseMatrix out(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t k = 0; k < a.dim; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < a.dim; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

PauliSum::PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
}

PauliSum::PauliSum(const PauliString& p, cplx coeff) : n_qubits_(p.n_qubits()) {
  accumulate(p, coeff);
  simplify();
}

PauliSum PauliSum::from_terms(
    std::size_t n_qubits,
    const std::vector<std::pair<std::string, cplx>>& terms) {
  PauliSum s(n_qubits);
  for (const auto& [letters, c] : terms) {
    if (letters.size() != n_qubits) {
      throw ValidationError(fmt::format(
          "term '{}' does not have {} letters", letters, n_qubits));
    }
    s.accumulate(key_from_letters(letters), c);
  }
  s.simplify();
  return s;
}

cplx PauliSum::coefficient(std::string_view letters) const {
  if (letters.size() != n_qubits_) return {};
  return coefficient(key_from_letters(letters));
}

cplx PauliSum::coefficient(const PauliKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? cplx{} : it->second;
}

void PauliSum::accumulate(const PauliKey& key, cplx coeff) {
  terms_[key] += coeff;
}

void PauliSum::accumulate(const PauliString& p, cplx coeff) {
  if (p.n_qubits() != n_qubits_) {
    throw ValidationError("Pauli size mismatch in PauliSum");
  }
  terms_[p.key()] += coeff * p.phase();
}

void PauliSum::simplify(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) < tol; });
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [key, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out = *this;
  for (auto& [key, c] : out.terms_) c = std::conj(c);
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (n_qubits_ == 0) n_qubits_ = other.n_qubits_;
  if (other.n_qubits_ != n_qubits_) {
    throw ValidationError(fmt::format("PauliSum size mismatch: {} vs {} qubits",
                                      n_qubits_, other.n_qubits_));
  }
  for (const auto& [key, c] : other.terms_) terms_[key] += c;
  simplify();
  return *this;
}

PauliSum& PauliSum::operator*=(cplx scale) {
  for (auto& [key, c] : terms_) c *= scale;
  simplify();
  return *this;
}

std::string PauliSum::to_text() const {
  std::string out;
  for (const auto& [key, c] : terms_) {
    out += format_coeff(c);
    out += ' ';
    out += key_letters(key, n_qubits_);
    out += '\n';
  }
  return out;
}

PauliSum PauliSum::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<std::string, cplx>> terms;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string coeff, letters;
    if (!(ls >> coeff)) continue;
    if (coeff.front() == '#') continue;
    if (!(ls >> letters)) throw ValidationError("missing letters in '" + line + "'");
    if (n == 0) n = letters.size();
    terms.emplace_back(letters, parse_coeff(coeff));
  }
  if (n == 0) throw ValidationError("empty PauliSum text");
  return from_terms(n, terms);
}

PauliSum add(const PauliSum& a, const PauliSum& b) {
  PauliSum out = a;
  out += b;
  return out;
}

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ValidationError("PauliSum size mismatch in product");
  }
  PauliSum out(a.n_qubits());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const PauliKey kc{ka.x ^ kb.x, ka.z ^ kb.z};
      out.accumulate(kc, ca * cb * kIPow[product_phase_power(ka, kb)]);
    }
  }
  out.simplify();
  return out;
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) { return add(a, b); }
PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  return multiply(a, b);
}
PauliSum operator*(cplx scale, const PauliSum& a) {
  PauliSum out = a;
  out *= scale;
  return out;
}

namespace {

void check_matrix_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapacityError(fmt::format(
        "dense matrix of {} qubits exceeds the cap of {}", n, cap));
  }
}

void add_word(DenseMatrix& m, const PauliKey& key, cplx coeff) {
  for (std::size_t col = 0; col < m.dim; ++col) {
    const std::size_t row = col ^ key.x;
    m(row, col) += coeff * pauli_basis_action(key, col);
  }
}

}  // namespace

DenseMatrix to_matrix(const PauliString& p, std::size_t qubit_cap) {
  check_matrix_cap(p.n_qubits(), qubit_cap);
  DenseMatrix m(std::size_t{1} << p.n_qubits());
  add_word(m, p.key(), p.phase());
  return m;
}

DenseMatrix to_matrix(const PauliSum& s, std::size_t qubit_cap) {
  check_matrix_cap(s.n_qubits(), qubit_cap);
  DenseMatrix m(std::size_t{1} << s.n_qubits());
  for (const auto& [key, c] : s.terms()) add_word(m, key, c);
  return m;
}

}  // namespace vqesim
