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

// Internal in-place kernels on a complex vector indexed by basis state.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "vqesim/circuit.hpp"
#include "vqesim/pauli.hpp"

namespace vqesim::detail {

inline void apply_1q(cplx* v, std::size_t dim, std::size_t q, const Mat2& m) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t hi = 0; hi < dim; hi += 2 * bit) {
    for (std::size_t i = hi; i < hi + bit; ++i) {
      const cplx a = v[i];
      const cplx b = v[i | bit];
      v[i] = m[0] * a + m[1] * b;
      v[i | bit] = m[2] * a + m[3] * b;
    }
  }
}

inline void apply_diag(cplx* v, std::size_t dim, std::size_t q, cplx d0,
                       cplx d1) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < dim; ++i) v[i] *= (i & bit) ? d1 : d0;
}

inline void apply_x(cplx* v, std::size_t dim, std::size_t q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(i & bit)) std::swap(v[i], v[i | bit]);
  }
}

inline void apply_cnot(cplx* v, std::size_t dim, std::size_t control,
                       std::size_t target) {
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cb) && !(i & tb)) std::swap(v[i], v[i | tb]);
  }
}

/// Applies a bound gate; `offset` shifts qubit indices (used for the row
/// half of a vectorized density matrix). `conjugate` applies conj(U).
inline void apply_gate(cplx* v, std::size_t dim, const Gate& g,
                       std::size_t offset = 0, bool conjugate = false) {
  const std::size_t q = g.qubits[0] + offset;
  switch (g.kind) {
    case GateKind::CNOT:
      apply_cnot(v, dim, q, g.qubits[1] + offset);
      return;
    case GateKind::X:
      apply_x(v, dim, q);
      return;
    case GateKind::Z:
      apply_diag(v, dim, q, 1.0, -1.0);
      return;
    case GateKind::RZ: {
      const cplx d0 = std::polar(1.0, -g.angle() / 2);
      apply_diag(v, dim, q, conjugate ? std::conj(d0) : d0,
                 conjugate ? d0 : std::conj(d0));
      return;
    }
    default: {
      Mat2 m = gate_matrix(g);
      if (conjugate) {
        for (auto& e : m) e = std::conj(e);
      }
      apply_1q(v, dim, q, m);
      return;
    }
  }
}

/// v <- cos(a/2) v - i sin(a/2) P v, i.e. exp(-i a P / 2) for a Hermitian
/// Pauli word P.
inline void apply_pauli_rotation(cplx* v, std::size_t dim, const PauliKey& key,
                                 double angle) {
  const double c = std::cos(angle / 2);
  const cplx mis{0.0, -std::sin(angle / 2)};
  const std::uint64_t x = key.x;
  if (x == 0) {
    for (std::size_t b = 0; b < dim; ++b) {
      v[b] *= c + mis * pauli_basis_action(key, b);
    }
    return;
  }
  // P pairs b with b^x; update each pair once (from its lower member).
  for (std::size_t b = 0; b < dim; ++b) {
    const std::size_t f = b ^ x;
    if (f < b) continue;
    const cplx pb = pauli_basis_action(key, b);  // P|b> = pb |f>
    const cplx pf = pauli_basis_action(key, f);  // P|f> = pf |b>
    const cplx vb = v[b];
    const cplx vf = v[f];
    v[b] = c * vb + mis * pf * vf;
    v[f] = c * vf + mis * pb * vb;
  }
}

}  // namespace vqesim::detail
