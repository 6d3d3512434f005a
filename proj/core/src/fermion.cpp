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

#include "vqesim/fermion.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "vqesim/error.hpp"

namespace vqesim {

namespace {

using OrderedTerms = std::map<std::vector<LadderOp>, cplx>;

// Bubble the product into normal order, spawning contraction terms for
// a_p a†_p -> 1 - a†_p a_p.
void normal_order_into(cplx coeff, std::vector<LadderOp> ops,
                       OrderedTerms& out) {
  for (std::size_t i = 1; i < ops.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      const LadderOp left = ops[j - 1];
      const LadderOp right = ops[j];
      if (right.dagger && !left.dagger) {
        if (left.mode == right.mode) {
          std::vector<LadderOp> reduced;
          reduced.reserve(ops.size() - 2);
          for (std::size_t k = 0; k < ops.size(); ++k) {
            if (k != j - 1 && k != j) reduced.push_back(ops[k]);
          }
          normal_order_into(coeff, std::move(reduced), out);
        }
        std::swap(ops[j - 1], ops[j]);
        coeff = -coeff;
      } else if (right.dagger == left.dagger) {
        if (right.mode == left.mode) return;  // a†a† or aa on one mode
        if (right.mode > left.mode) {
          std::swap(ops[j - 1], ops[j]);
          coeff = -coeff;
        }
      }
    }
  }
  out[ops] += coeff;
}

}  // namespace

void FermionOperator::add_term(cplx coeff, std::vector<LadderOp> ops) {
  for (const auto& op : ops) {
    if (op.mode >= n_modes_) {
      throw ValidationError(fmt::format(
          "ladder operator on mode {} but the operator has {} modes", op.mode,
          n_modes_));
    }
  }
  terms_.push_back({coeff, std::move(ops)});
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out(n_modes_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<LadderOp> ops(t.ops.rbegin(), t.ops.rend());
    for (auto& op : ops) op.dagger = !op.dagger;
    out.terms_.push_back({std::conj(t.coeff), std::move(ops)});
  }
  return out;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  if (n_modes_ == 0) n_modes_ = other.n_modes_;
  if (other.n_modes_ != n_modes_) {
    throw ValidationError("FermionOperator mode-count mismatch");
  }
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

FermionOperator& FermionOperator::operator*=(cplx scale) {
  for (auto& t : terms_) t.coeff *= scale;
  return *this;
}

FermionOperator FermionOperator::normal_ordered(double tol) const {
  OrderedTerms merged;
  for (const auto& t : terms_) normal_order_into(t.coeff, t.ops, merged);
  FermionOperator out(n_modes_);
  for (auto& [ops, c] : merged) {
    if (std::abs(c) >= tol) out.terms_.push_back({c, ops});
  }
  return out;
}

bool FermionOperator::is_zero(double tol) const {
  const auto n = normal_ordered(0.0);
  return std::all_of(n.terms_.begin(), n.terms_.end(),
                     [tol](const FermionTerm& t) { return std::abs(t.coeff) <= tol; });
}

bool FermionOperator::is_hermitian(double tol) const {
  return (*this - adjoint()).is_zero(tol);
}

bool FermionOperator::is_anti_hermitian(double tol) const {
  return (*this + adjoint()).is_zero(tol);
}

std::string FermionOperator::str() const {
  std::string out;
  for (const auto& t : terms_) {
    out += fmt::format("({}{:+}j)", t.coeff.real(), t.coeff.imag());
    for (const auto& op : t.ops) {
      out += fmt::format(" {}{}", op.mode, op.dagger ? "^" : "");
    }
    out += '\n';
  }
  return out;
}

FermionOperator operator+(const FermionOperator& a, const FermionOperator& b) {
  FermionOperator out = a;
  out += b;
  return out;
}

FermionOperator operator-(const FermionOperator& a, const FermionOperator& b) {
  FermionOperator neg = b;
  neg *= -1.0;
  return a + neg;
}

FermionOperator build_hamiltonian(const MolecularIntegrals& m) {
  m.validate();
  const std::size_t n = m.n_orbitals;
  FermionOperator h(2 * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const double v = m.one(p, q);
      if (v == 0.0) continue;
      for (int s = 0; s < 2; ++s) {
        h.add_term(v, {cre(spin_orbital(p, s)), ann(spin_orbital(q, s))});
      }
    }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = m.physicist(p, q, r, s);
          if (v == 0.0) continue;
          for (int sigma = 0; sigma < 2; ++sigma)
            for (int tau = 0; tau < 2; ++tau) {
              const auto P = spin_orbital(p, sigma);
              const auto Q = spin_orbital(q, tau);
              const auto R = spin_orbital(r, tau);
              const auto S = spin_orbital(s, sigma);
              if (P == Q || R == S) continue;
              h.add_term(0.5 * v, {cre(P), cre(Q), ann(R), ann(S)});
            }
        }
  return h;
}

PauliSum jordan_wigner(const LadderOp& op, std::size_t n_qubits) {
  if (op.mode >= n_qubits) {
    throw ValidationError("ladder operator mode exceeds the qubit count");
  }
  const std::uint64_t tail = (std::uint64_t{1} << op.mode) - 1;
  const std::uint64_t bit = std::uint64_t{1} << op.mode;
  PauliSum s(n_qubits);
  // a† = Z..Z (X − iY)/2, a = Z..Z (X + iY)/2.
  s.accumulate(PauliKey{bit, tail}, 0.5);
  s.accumulate(PauliKey{bit, tail | bit}, op.dagger ? cplx{0, -0.5} : cplx{0, 0.5});
  return s;
}

PauliSum jordan_wigner(const FermionOperator& f) {
  const std::size_t n = f.n_modes();
  PauliSum out(n);
  std::vector<std::pair<PauliKey, cplx>> acc, next;
  for (const auto& t : f.terms()) {
    acc.assign(1, {PauliKey{}, t.coeff});
    for (const auto& op : t.ops) {
      const PauliSum img = jordan_wigner(op, n);
      next.clear();
      for (const auto& [ka, ca] : acc) {
        for (const auto& [kb, cb] : img.terms()) {
          static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
          next.emplace_back(PauliKey{ka.x ^ kb.x, ka.z ^ kb.z},
                            ca * cb * kIPow[product_phase_power(ka, kb)]);
        }
      }
      std::swap(acc, next);
    }
    for (const auto& [k, c] : acc) out.accumulate(k, c);
  }
  out.simplify();
  return out;
}

PauliSum qubit_hamiltonian(const MolecularIntegrals& m) {
  PauliSum h = jordan_wigner(build_hamiltonian(m));
  if (!h.is_hermitian(1e-12)) {
    throw RuntimeError("Jordan-Wigner image of the Hamiltonian is not Hermitian");
  }
  PauliSum real(h.n_qubits());
  for (const auto& [k, c] : h.terms()) real.accumulate(k, c.real());
  real.simplify();
  return real;
}

PauliSum number_operator(std::size_t n_qubits) {
  PauliSum s(n_qubits);
  for (std::size_t j = 0; j < n_qubits; ++j) {
    s.accumulate(PauliKey{}, 0.5);
    s.accumulate(PauliKey{0, std::uint64_t{1} << j}, -0.5);
  }
  s.simplify();
  return s;
}

}  // namespace vqesim
