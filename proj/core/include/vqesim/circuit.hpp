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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vqesim {

enum class GateKind { H, X, Y, Z, RX, RY, RZ, CNOT };

inline constexpr std::array<GateKind, 8> kAllGateKinds = {
    GateKind::H,  GateKind::X,  GateKind::Y,  GateKind::Z,
    GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::CNOT};

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<std::complex<double>, 4>;

std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);

inline bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}
inline bool is_two_qubit(GateKind k) { return k == GateKind::CNOT; }

/// Angle = scale * theta[index].
struct SymbolicAngle {
  std::size_t index = 0;
  double scale = 1.0;

  friend bool operator==(const SymbolicAngle&, const SymbolicAngle&) = default;
};

/// Rotation angle in radians, either bound or symbolic; monostate for
/// unparameterized gates.
using GateParameter = std::variant<std::monostate, double, SymbolicAngle>;

struct Gate {
  GateKind kind = GateKind::H;
  /// qubits[0] is the target of a 1-qubit gate or the CNOT control;
  /// qubits[1] is the CNOT target.
  std::array<std::size_t, 2> qubits{0, 0};
  GateParameter parameter{};

  static Gate single(GateKind kind, std::size_t q);
  static Gate rotation(GateKind kind, std::size_t q, double angle);
  static Gate rotation(GateKind kind, std::size_t q, SymbolicAngle angle);
  static Gate cnot(std::size_t control, std::size_t target);

  std::size_t arity() const { return is_two_qubit(kind) ? 2 : 1; }
  bool is_bound() const {
    return !std::holds_alternative<SymbolicAngle>(parameter);
  }
  /// Bound angle; throws when symbolic or absent.
  double angle() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Matrix of a single-qubit gate. With c = cos(a/2), s = sin(a/2):
/// RX = [[c, -is], [-is, c]], RY = [[c, -s], [s, c]],
/// RZ = diag(e^{-ia/2}, e^{ia/2}). Throws for CNOT.
Mat2 gate_matrix(GateKind kind, double angle = 0.0);
Mat2 gate_matrix(const Gate& bound_gate);

enum class AnsatzFamily { custom, he_v1, he_v2, he_v3, qucc };

std::string_view family_name(AnsatzFamily f);

class ParameterizedCircuit {
 public:
  ParameterizedCircuit() = default;
  explicit ParameterizedCircuit(std::size_t n_qubits,
                                AnsatzFamily family = AnsatzFamily::custom,
                                std::size_t depth = 0);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t n_parameters() const noexcept { return n_parameters_; }
  AnsatzFamily family() const noexcept { return family_; }
  std::size_t depth() const noexcept { return depth_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  /// Appends a gate after validating arity, qubit range and parameters.
  void append(const Gate& g);
  void append(const ParameterizedCircuit& other);

  /// Allocates a fresh parameter slot and returns its index.
  std::size_t new_parameter() { return n_parameters_++; }
  void reserve_parameters(std::size_t n);

  bool is_bound() const;

  /// Invariants: gate validity, every parameter index < n_parameters and
  /// referenced at least once.
  void validate() const;

  /// Line format `GATE q0 [q1] [pK | pK*scale | angle]`, preceded by a
  /// `# n_qubits=.. n_parameters=.. family=.. depth=..` header.
  std::string to_text() const;
  static ParameterizedCircuit from_text(std::string_view text);

  friend bool operator==(const ParameterizedCircuit&,
                         const ParameterizedCircuit&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::size_t n_parameters_ = 0;
  AnsatzFamily family_ = AnsatzFamily::custom;
  std::size_t depth_ = 0;
  std::vector<Gate> gates_;
};

/// Replaces symbolic angles by scale * theta[index]. Already bound gates
/// are untouched, so binding twice is idempotent.
ParameterizedCircuit bind(const ParameterizedCircuit& c,
                          std::span<const double> theta);

/// Circuit inverse (reverse order, negated angles); bound circuits only.
ParameterizedCircuit inverse(const ParameterizedCircuit& c);

}  // namespace vqesim
