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

#include "vqesim/ansatz.hpp"

#include <fmt/format.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "vqesim/error.hpp"

namespace vqesim {

namespace {

constexpr double kDegenerateDenominator = 1e-10;
constexpr double kAntiHermitianTolerance = 1e-12;

int spin_of(std::size_t spin_orbital_index) {
  return static_cast<int>(spin_orbital_index % 2);
}

// JW image of G as (word, c) pairs with JW(G) = Σ i c P.
std::vector<std::pair<PauliKey, double>> jw_imaginary_terms(
    const FermionOperator& g) {
  std::vector<std::pair<PauliKey, double>> out;
  const PauliSum image = jordan_wigner(g);
  for (const auto& [key, coeff] : image.terms()) {
    if (std::abs(coeff.real()) > kAntiHermitianTolerance) {
      throw ValidationError("qUCC generator is not anti-Hermitian");
    }
    if (key.is_identity()) continue;  // global phase only
    out.emplace_back(key, coeff.imag());
  }
  return out;
}

std::vector<std::size_t> support_qubits(const PauliKey& key) {
  std::vector<std::size_t> qs;
  for (std::uint64_t s = key.support(); s != 0; s &= s - 1) {
    qs.push_back(static_cast<std::size_t>(std::countr_zero(s)));
  }
  return qs;
}

}  // namespace

HeVariant he_variant_from_name(std::string_view name) {
  if (name == "v1" || name == "1") return HeVariant::v1;
  if (name == "v2" || name == "2") return HeVariant::v2;
  if (name == "v3" || name == "3") return HeVariant::v3;
  throw ValidationError(fmt::format("unknown hardware-efficient variant '{}'", name));
}

std::size_t he_parameter_count(HeVariant v, std::size_t n_qubits,
                               std::size_t depth) {
  if (v == HeVariant::v3) return 2 * depth * (3 * n_qubits - 2);
  return depth * n_qubits;
}

ParameterizedCircuit build_he(HeVariant variant, std::size_t n_qubits,
                              std::size_t depth) {
  if (depth < 1) throw ValidationError("hardware-efficient depth must be >= 1");
  if (n_qubits < 1) throw ValidationError("hardware-efficient circuit needs qubits");
  if (variant == HeVariant::v1 && n_qubits % 2 != 0) {
    throw ValidationError("HE-v1 needs an even number of qubits");
  }
  const AnsatzFamily fam = variant == HeVariant::v1   ? AnsatzFamily::he_v1
                           : variant == HeVariant::v2 ? AnsatzFamily::he_v2
                                                      : AnsatzFamily::he_v3;
  ParameterizedCircuit c(n_qubits, fam, depth);
  auto rot = [&c](GateKind k, std::size_t q) {
    c.append(Gate::rotation(k, q, SymbolicAngle{c.new_parameter(), 1.0}));
  };
  auto alternating = [&](std::size_t q) {
    rot(q % 2 == 0 ? GateKind::RY : GateKind::RX, q);
  };
  auto pair = [&](std::size_t q) {
    rot(GateKind::RY, q);
    rot(GateKind::RX, q);
  };
  const std::size_t n_h = variant == HeVariant::v1 ? n_qubits / 2 : n_qubits;
  for (std::size_t q = 0; q < n_h; ++q) c.append(Gate::single(GateKind::H, q));
  for (std::size_t layer = 0; layer < depth; ++layer) {
    switch (variant) {
      case HeVariant::v1: {
        const std::size_t half = n_qubits / 2;
        for (std::size_t q = 0; q < n_qubits; ++q) alternating(q);
        for (std::size_t i = 0; i < half; ++i) c.append(Gate::cnot(i, i + half));
        for (std::size_t k = 0; 2 * k + 1 < n_qubits; ++k) {
          c.append(Gate::cnot(2 * k, 2 * k + 1));
        }
        break;
      }
      case HeVariant::v2:
        for (std::size_t q = 0; q < n_qubits; ++q) alternating(q);
        for (std::size_t i = 0; i + 1 < n_qubits; ++i) c.append(Gate::cnot(i, i + 1));
        break;
      case HeVariant::v3:
        for (std::size_t q = 0; q < n_qubits; ++q) pair(q);
        for (std::size_t i = 0; i + 1 < n_qubits; ++i) {
          c.append(Gate::cnot(i, i + 1));
          pair(i);
          pair(i + 1);
        }
        break;
    }
  }
  return c;
}

FermionOperator Excitation::generator(std::size_t n_modes) const {
  FermionOperator g(n_modes);
  if (is_double()) {
    g.add_term(1.0, {cre(to[0]), cre(to[1]), ann(from[0]), ann(from[1])});
    g.add_term(-1.0, {cre(from[0]), cre(from[1]), ann(to[0]), ann(to[1])});
  } else {
    g.add_term(1.0, {cre(to[0]), ann(from[0])});
    g.add_term(-1.0, {cre(from[0]), ann(to[0])});
  }
  return g;
}

std::string Excitation::label() const {
  if (is_double()) {
    return fmt::format("d({},{}<-{},{})", to[0], to[1], from[0], from[1]);
  }
  return fmt::format("s({}<-{})", to[0], from[0]);
}

void QuccAmplitudes::validate() const {
  for (const auto& [k, v] : singles) {
    if (!std::isfinite(v)) throw ValidationError("non-finite single amplitude");
    if (k.first == k.second) throw ValidationError("single amplitude indices overlap");
  }
  for (const auto& [k, v] : doubles) {
    if (!std::isfinite(v)) throw ValidationError("non-finite double amplitude");
    if (k[0] <= k[1] || k[2] <= k[3]) {
      throw ValidationError("double amplitudes need p > q and r > s");
    }
    for (int a = 0; a < 2; ++a)
      for (int b = 2; b < 4; ++b)
        if (k[a] == k[b]) throw ValidationError("double amplitude indices overlap");
  }
}

std::vector<std::size_t> QuccGenerator::occupied() const {
  std::vector<std::size_t> o;
  for (std::size_t i = 0; i < n_electrons; ++i) o.push_back(i);
  return o;
}

std::vector<std::size_t> QuccGenerator::unoccupied() const {
  std::vector<std::size_t> u;
  for (std::size_t i = n_electrons; i < n_qubits; ++i) u.push_back(i);
  return u;
}

FermionOperator QuccGenerator::operator_at(std::span<const double> theta) const {
  if (theta.size() != excitations.size()) {
    throw ValidationError("theta length does not match the excitation count");
  }
  FermionOperator t(n_qubits);
  for (std::size_t k = 0; k < excitations.size(); ++k) {
    FermionOperator g = excitations[k].generator(n_qubits);
    g *= theta[k];
    t += g;
  }
  return t;
}

std::vector<double> QuccGenerator::theta_from(const QuccAmplitudes& amps) const {
  std::vector<double> theta(excitations.size(), 0.0);
  for (std::size_t k = 0; k < excitations.size(); ++k) {
    const auto& e = excitations[k];
    if (e.is_double()) {
      const auto it = amps.doubles.find({e.to[0], e.to[1], e.from[0], e.from[1]});
      if (it != amps.doubles.end()) theta[k] = it->second;
    } else {
      const auto it = amps.singles.find({e.to[0], e.from[0]});
      if (it != amps.singles.end()) theta[k] = it->second;
    }
  }
  return theta;
}

QuccGenerator build_qucc_generator(std::size_t n_spin_orbitals,
                                   std::size_t n_electrons,
                                   QuccOptions options) {
  if (n_electrons == 0) throw ValidationError("qUCC needs at least one active electron");
  if (n_electrons > n_spin_orbitals) {
    throw ValidationError("more active electrons than spin orbitals");
  }
  if (n_spin_orbitals > kMaxPauliQubits) {
    throw CapacityError("too many spin orbitals for the Pauli encoding");
  }
  QuccGenerator g;
  g.n_qubits = n_spin_orbitals;
  g.n_electrons = n_electrons;
  const auto occ = g.occupied();
  const auto vir = g.unoccupied();
  for (std::size_t p : vir)
    for (std::size_t q : vir) {
      if (q >= p) continue;
      for (std::size_t r : occ)
        for (std::size_t s : occ) {
          if (s >= r) continue;
          if (options.spin_conserving &&
              spin_of(p) + spin_of(q) != spin_of(r) + spin_of(s)) {
            continue;
          }
          g.excitations.push_back({{p, q}, {r, s}});
        }
    }
  for (std::size_t p : vir)
    for (std::size_t r : occ) {
      if (options.spin_conserving && spin_of(p) != spin_of(r)) continue;
      g.excitations.push_back({{p}, {r}});
    }
  return g;
}

QuccGenerator build_qucc_generator(const MolecularIntegrals& frozen,
                                   QuccOptions options) {
  return build_qucc_generator(2 * frozen.n_orbitals, frozen.n_electrons, options);
}

QuccAmplitudes mp2_initial_amplitudes(const MolecularIntegrals& frozen,
                                      const QuccGenerator& generator) {
  if (!frozen.orbital_energies) {
    throw ValidationError("MP2 amplitudes need orbital energies");
  }
  if (generator.n_qubits != 2 * frozen.n_orbitals) {
    throw ValidationError("generator and integrals describe different orbital sets");
  }
  const auto& eps = *frozen.orbital_energies;
  auto h = [&frozen](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    if (spin_of(p) != spin_of(s) || spin_of(q) != spin_of(r)) return 0.0;
    return frozen.physicist(p / 2, q / 2, r / 2, s / 2);
  };
  QuccAmplitudes amps;
  for (const auto& e : generator.excitations) {
    if (!e.is_double()) {
      amps.singles[{e.to[0], e.from[0]}] = 0.0;
      continue;
    }
    const std::size_t p = e.to[0], q = e.to[1], r = e.from[0], s = e.from[1];
    const double num = h(p, q, r, s) - h(p, q, s, r);
    const double den = eps[r / 2] + eps[s / 2] - eps[p / 2] - eps[q / 2];
    double theta = 0.0;
    if (std::abs(den) < kDegenerateDenominator) {
      amps.warnings.push_back(fmt::format(
          "degenerate MP2 denominator for {}; amplitude set to 0", e.label()));
    } else {
      theta = num / den;
    }
    amps.doubles[{p, q, r, s}] = theta;
  }
  amps.validate();
  return amps;
}

ParameterizedCircuit hartree_fock_circuit(std::size_t n_qubits,
                                          std::size_t n_electrons) {
  if (n_electrons > n_qubits) throw ValidationError("more electrons than qubits");
  ParameterizedCircuit c(n_qubits);
  for (std::size_t q = 0; q < n_electrons; ++q) c.append(Gate::single(GateKind::X, q));
  return c;
}

ParameterizedCircuit pauli_exponential(const PauliKey& key, std::size_t n_qubits,
                                       GateParameter angle) {
  ParameterizedCircuit c(n_qubits);
  const auto qs = support_qubits(key);
  if (qs.empty()) throw ValidationError("identity has no Pauli exponential");
  if (qs.back() >= n_qubits) throw ValidationError("Pauli word exceeds the register");
  auto basis = [&](bool forward) {
    for (std::size_t q : qs) {
      const bool x = (key.x >> q) & 1;
      const bool z = (key.z >> q) & 1;
      if (x && z) {
        c.append(Gate::rotation(GateKind::RX, q,
                                (forward ? 1.0 : -1.0) * std::numbers::pi / 2));
      } else if (x) {
        c.append(Gate::single(GateKind::H, q));
      }
    }
  };
  basis(true);
  for (std::size_t i = 0; i + 1 < qs.size(); ++i) c.append(Gate::cnot(qs[i], qs[i + 1]));
  c.append(Gate{GateKind::RZ, {qs.back(), qs.back()}, angle});
  for (std::size_t i = qs.size() - 1; i > 0; --i) c.append(Gate::cnot(qs[i - 1], qs[i]));
  basis(false);
  return c;
}

ParameterizedCircuit trotterize_qucc(const QuccGenerator& g, int order) {
  if (order != 1) throw ValidationError("only first-order Trotterization is supported");
  ParameterizedCircuit c(g.n_qubits, AnsatzFamily::qucc, 1);
  c.append(hartree_fock_circuit(g.n_qubits, g.n_electrons));
  for (std::size_t k = 0; k < g.excitations.size(); ++k) {
    const FermionOperator gen = g.excitations[k].generator(g.n_qubits);
    if (!gen.is_anti_hermitian()) {
      throw ValidationError("qUCC generator is not anti-Hermitian");
    }
    for (const auto& [key, coeff] : jw_imaginary_terms(gen)) {
      c.append(pauli_exponential(key, g.n_qubits, SymbolicAngle{k, -2.0 * coeff}));
    }
  }
  c.reserve_parameters(g.n_parameters());
  return c;
}

Statevector PauliRotationProgram::run(std::span<const double> theta) const {
  if (theta.size() != n_parameters) {
    throw ValidationError("theta length does not match the program");
  }
  Statevector s = Statevector::basis(n_qubits, initial_x_mask);
  for (const auto& r : rotations) s.apply_pauli_rotation(r.key, r.scale * theta[r.index]);
  return s;
}

PauliRotationProgram qucc_rotation_program(const QuccGenerator& g) {
  PauliRotationProgram prog;
  prog.n_qubits = g.n_qubits;
  prog.n_parameters = g.n_parameters();
  prog.initial_x_mask =
      g.n_electrons >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n_electrons) - 1;
  for (std::size_t k = 0; k < g.excitations.size(); ++k) {
    const FermionOperator gen = g.excitations[k].generator(g.n_qubits);
    for (const auto& [key, coeff] : jw_imaginary_terms(gen)) {
      prog.rotations.push_back({key, k, -2.0 * coeff});
    }
  }
  return prog;
}

}  // namespace vqesim
