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

#include "vqesim/statevector.hpp"

#include <fmt/format.h>

#include <bit>
#include <cmath>

#include "kernels.hpp"
#include "vqesim/error.hpp"

namespace vqesim {

Statevector Statevector::zero(std::size_t n_qubits, std::size_t qubit_cap) {
  if (n_qubits == 0) throw ValidationError("statevector needs at least one qubit");
  if (n_qubits > qubit_cap) {
    throw CapacityError(fmt::format(
        "statevector of {} qubits exceeds the cap of {}", n_qubits, qubit_cap));
  }
  Statevector s;
  s.n_qubits_ = n_qubits;
  s.amps_.assign(std::size_t{1} << n_qubits, cplx{});
  s.amps_[0] = 1.0;
  return s;
}

Statevector Statevector::basis(std::size_t n_qubits, std::uint64_t index) {
  Statevector s = zero(n_qubits);
  if (index >= s.dim()) throw ValidationError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(std::vector<cplx> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw ValidationError("amplitude vector length must be a power of two");
  }
  Statevector s;
  s.n_qubits_ = static_cast<std::size_t>(std::countr_zero(dim));
  s.amps_ = std::move(amplitudes);
  if (std::abs(s.norm() - 1.0) > 1e-12) {
    throw ValidationError("statevector amplitudes are not normalized");
  }
  return s;
}

double Statevector::norm() const {
  double acc = 0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void Statevector::apply(const Gate& g) {
  for (std::size_t i = 0; i < g.arity(); ++i) {
    if (g.qubits[i] >= n_qubits_) throw ValidationError("gate qubit out of range");
  }
  if (!g.is_bound()) throw ValidationError("cannot simulate an unbound gate");
  detail::apply_gate(amps_.data(), amps_.size(), g);
}

void Statevector::apply_pauli_rotation(const PauliKey& key, double angle) {
  if (n_qubits_ < 64 && (key.support() >> n_qubits_) != 0) {
    throw ValidationError("Pauli rotation acts outside the register");
  }
  detail::apply_pauli_rotation(amps_.data(), amps_.size(), key, angle);
}

void Statevector::normalize() {
  const double n = norm();
  if (!(n > 0.0)) throw RuntimeError("cannot normalize a zero statevector");
  if (n == 1.0) return;
  for (auto& a : amps_) a /= n;
}

std::vector<double> Statevector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

void Statevector::apply(const ParameterizedCircuit& c) {
  if (c.n_qubits() != n_qubits_) {
    throw ValidationError("circuit and state qubit counts differ");
  }
  if (!c.is_bound()) throw ValidationError("circuit has unbound parameters");
  for (const auto& g : c.gates()) {
    detail::apply_gate(amps_.data(), amps_.size(), g);
  }
}

Statevector run_statevector(const ParameterizedCircuit& c,
                            std::size_t qubit_cap) {
  if (!c.is_bound()) throw ValidationError("circuit has unbound parameters");
  Statevector s = Statevector::zero(c.n_qubits(), qubit_cap);
  s.apply(c);
  s.normalize();
  return s;
}

}  // namespace vqesim
