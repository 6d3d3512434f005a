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

#include "vqesim/circuit.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "vqesim/error.hpp"

namespace vqesim {

namespace {

constexpr std::array<std::string_view, 8> kGateNames = {
    "H", "X", "Y", "Z", "RX", "RY", "RZ", "CNOT"};

constexpr std::array<std::string_view, 5> kFamilyNames = {
    "custom", "he-v1", "he-v2", "he-v3", "qucc"};

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw ValidationError("bad number '" + s + "' in circuit text");
  }
  return v;
}

std::size_t to_index(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s.front() == '-') {
    throw ValidationError("bad index '" + s + "' in circuit text");
  }
  return v;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  return kGateNames[static_cast<std::size_t>(kind)];
}

GateKind gate_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kGateNames.size(); ++i) {
    if (kGateNames[i] == name) return static_cast<GateKind>(i);
  }
  throw ValidationError(fmt::format("unknown gate '{}'", name));
}

Mat2 gate_matrix(GateKind kind, double angle) {
  using C = std::complex<double>;
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  const double r = std::numbers::sqrt2 / 2;
  switch (kind) {
    case GateKind::H: return {C{r}, C{r}, C{r}, C{-r}};
    case GateKind::X: return {C{0}, C{1}, C{1}, C{0}};
    case GateKind::Y: return {C{0}, C{0, -1}, C{0, 1}, C{0}};
    case GateKind::Z: return {C{1}, C{0}, C{0}, C{-1}};
    case GateKind::RX: return {C{c}, C{0, -s}, C{0, -s}, C{c}};
    case GateKind::RY: return {C{c}, C{-s}, C{s}, C{c}};
    case GateKind::RZ: return {C{c, -s}, C{0}, C{0}, C{c, s}};
    case GateKind::CNOT: break;
  }
  throw ValidationError("CNOT has no 2x2 matrix");
}

Mat2 gate_matrix(const Gate& g) {
  return gate_matrix(g.kind, is_rotation(g.kind) ? g.angle() : 0.0);
}

std::string_view family_name(AnsatzFamily f) {
  return kFamilyNames[static_cast<std::size_t>(f)];
}

Gate Gate::single(GateKind kind, std::size_t q) {
  if (is_rotation(kind) || is_two_qubit(kind)) {
    throw ValidationError("Gate::single needs H, X, Y or Z");
  }
  return Gate{kind, {q, q}, std::monostate{}};
}

Gate Gate::rotation(GateKind kind, std::size_t q, double angle) {
  if (!is_rotation(kind)) throw ValidationError("not a rotation gate");
  return Gate{kind, {q, q}, angle};
}

Gate Gate::rotation(GateKind kind, std::size_t q, SymbolicAngle angle) {
  if (!is_rotation(kind)) throw ValidationError("not a rotation gate");
  return Gate{kind, {q, q}, angle};
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
  return Gate{GateKind::CNOT, {control, target}, std::monostate{}};
}

double Gate::angle() const {
  if (const auto* a = std::get_if<double>(&parameter)) return *a;
  throw ValidationError(fmt::format("{} gate has no bound angle", gate_name(kind)));
}

ParameterizedCircuit::ParameterizedCircuit(std::size_t n_qubits,
                                           AnsatzFamily family,
                                           std::size_t depth)
    : n_qubits_(n_qubits), family_(family), depth_(depth) {
  if (n_qubits == 0) throw ValidationError("circuit needs at least one qubit");
}

void ParameterizedCircuit::append(const Gate& g) {
  const bool has_param = !std::holds_alternative<std::monostate>(g.parameter);
  if (is_rotation(g.kind) != has_param) {
    throw ValidationError(fmt::format(
        "{} gate {} a parameter", gate_name(g.kind),
        has_param ? "must not carry" : "needs exactly one"));
  }
  for (std::size_t i = 0; i < g.arity(); ++i) {
    if (g.qubits[i] >= n_qubits_) {
      throw ValidationError(fmt::format("qubit {} out of range for {} qubits",
                                        g.qubits[i], n_qubits_));
    }
  }
  if (g.kind == GateKind::CNOT && g.qubits[0] == g.qubits[1]) {
    throw ValidationError("CNOT control and target must differ");
  }
  if (const auto* s = std::get_if<SymbolicAngle>(&g.parameter)) {
    if (s->index >= n_parameters_) n_parameters_ = s->index + 1;
  }
  gates_.push_back(g);
}

void ParameterizedCircuit::append(const ParameterizedCircuit& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw ValidationError("cannot append circuits of different widths");
  }
  for (const auto& g : other.gates_) append(g);
}

void ParameterizedCircuit::reserve_parameters(std::size_t n) {
  if (n > n_parameters_) n_parameters_ = n;
}

bool ParameterizedCircuit::is_bound() const {
  for (const auto& g : gates_) {
    if (!g.is_bound()) return false;
  }
  return true;
}

void ParameterizedCircuit::validate() const {
  std::vector<bool> used(n_parameters_, false);
  for (const auto& g : gates_) {
    if (const auto* s = std::get_if<SymbolicAngle>(&g.parameter)) {
      if (s->index >= n_parameters_) {
        throw ValidationError("parameter index out of range");
      }
      used[s->index] = true;
    }
  }
  if (!is_bound()) {
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (!used[i]) {
        throw ValidationError(fmt::format("parameter {} is never used", i));
      }
    }
  }
}

std::string ParameterizedCircuit::to_text() const {
  std::string out =
      fmt::format("# n_qubits={} n_parameters={} family={} depth={}\n",
                  n_qubits_, n_parameters_, family_name(family_), depth_);
  for (const auto& g : gates_) {
    out += gate_name(g.kind);
    out += fmt::format(" {}", g.qubits[0]);
    if (g.arity() == 2) out += fmt::format(" {}", g.qubits[1]);
    if (const auto* a = std::get_if<double>(&g.parameter)) {
      out += fmt::format(" {}", *a);
    } else if (const auto* s = std::get_if<SymbolicAngle>(&g.parameter)) {
      if (s->scale == 1.0) {
        out += fmt::format(" p{}", s->index);
      } else {
        out += fmt::format(" p{}*{}", s->index, s->scale);
      }
    }
    out += '\n';
  }
  return out;
}

ParameterizedCircuit ParameterizedCircuit::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<ParameterizedCircuit> c;
  std::size_t declared_params = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "#") {
      std::size_t nq = 0, depth = 0;
      AnsatzFamily fam = AnsatzFamily::custom;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const auto eq = tok[i].find('=');
        if (eq == std::string::npos) continue;
        const auto key = tok[i].substr(0, eq);
        const auto val = tok[i].substr(eq + 1);
        if (key == "n_qubits") nq = to_index(val);
        if (key == "n_parameters") declared_params = to_index(val);
        if (key == "depth") depth = to_index(val);
        if (key == "family") {
          for (std::size_t f = 0; f < kFamilyNames.size(); ++f) {
            if (kFamilyNames[f] == val) fam = static_cast<AnsatzFamily>(f);
          }
        }
      }
      if (!c && nq > 0) c.emplace(nq, fam, depth);
      continue;
    }
    if (!c) throw ValidationError("circuit text needs a '# n_qubits=' header");
    const GateKind kind = gate_kind_from_name(tok[0]);
    const std::size_t need = (is_two_qubit(kind) ? 3 : 2) + (is_rotation(kind) ? 1 : 0);
    if (tok.size() != need) {
      throw ValidationError("wrong field count in circuit line '" + line + "'");
    }
    if (kind == GateKind::CNOT) {
      c->append(Gate::cnot(to_index(tok[1]), to_index(tok[2])));
    } else if (!is_rotation(kind)) {
      c->append(Gate::single(kind, to_index(tok[1])));
    } else if (tok[2].starts_with('p')) {
      const auto star = tok[2].find('*');
      SymbolicAngle s;
      s.index = to_index(tok[2].substr(1, star == std::string::npos
                                              ? std::string::npos
                                              : star - 1));
      if (star != std::string::npos) s.scale = to_double(tok[2].substr(star + 1));
      c->append(Gate::rotation(kind, to_index(tok[1]), s));
    } else {
      c->append(Gate::rotation(kind, to_index(tok[1]), to_double(tok[2])));
    }
  }
  if (!c) throw ValidationError("empty circuit text");
  c->reserve_parameters(declared_params);
  return *c;
}

ParameterizedCircuit bind(const ParameterizedCircuit& c,
                          std::span<const double> theta) {
  if (theta.size() != c.n_parameters()) {
    throw ValidationError(fmt::format(
        "circuit has {} parameters but {} values were given", c.n_parameters(),
        theta.size()));
  }
  ParameterizedCircuit out(c.n_qubits(), c.family(), c.depth());
  out.reserve_parameters(c.n_parameters());
  for (Gate g : c.gates()) {
    if (const auto* s = std::get_if<SymbolicAngle>(&g.parameter)) {
      g.parameter = s->scale * theta[s->index];
    }
    out.append(g);
  }
  return out;
}

ParameterizedCircuit inverse(const ParameterizedCircuit& c) {
  if (!c.is_bound()) throw ValidationError("inverse needs a bound circuit");
  ParameterizedCircuit out(c.n_qubits(), AnsatzFamily::custom, 0);
  const auto& gates = c.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    Gate g = *it;
    if (auto* a = std::get_if<double>(&g.parameter)) *a = -*a;
    out.append(g);
  }
  return out;
}

}  // namespace vqesim
