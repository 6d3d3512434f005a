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

#include "vqesim/noise.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "vqesim/error.hpp"

namespace vqesim {

namespace {

constexpr double kTimeTolerance = 1e-9;  // ns

double parse_time(const nlohmann::json& v, const char* name) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    throw ValidationError(fmt::format("{} must be a number or \"inf\"", name));
  }
  if (!v.is_number()) throw ValidationError(fmt::format("{} must be a number", name));
  return v.get<double>();
}

nlohmann::json time_json(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

}  // namespace

std::map<GateKind, double> NoiseModel::default_durations() {
  std::map<GateKind, double> d;
  for (GateKind k : kAllGateKinds) d[k] = 60.0;
  d[GateKind::CNOT] = 150.0;
  return d;
}

NoiseModel NoiseModel::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("noise model JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("noise model JSON must be an object");
  NoiseModel nm;
  for (const auto& [key, value] : j.items()) {
    if (key == "t1_us") {
      nm.t1_us = parse_time(value, "t1_us");
    } else if (key == "t2_us") {
      nm.t2_us = parse_time(value, "t2_us");
    } else if (key == "enabled") {
      if (!value.is_boolean()) throw ValidationError("enabled must be a boolean");
      nm.enabled = value.get<bool>();
    } else if (key == "durations_ns") {
      if (!value.is_object()) throw ValidationError("durations_ns must be an object");
      for (const auto& [gate, dur] : value.items()) {
        if (!dur.is_number()) {
          throw ValidationError(fmt::format("duration of {} must be a number", gate));
        }
        nm.durations_ns[gate_kind_from_name(gate)] = dur.get<double>();
      }
    } else {
      throw ValidationError(fmt::format("unknown noise model key '{}'", key));
    }
  }
  nm.validate();
  return nm;
}

NoiseModel NoiseModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(fmt::format("cannot open noise model '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string NoiseModel::to_json() const {
  nlohmann::ordered_json j;
  j["t1_us"] = time_json(t1_us);
  j["t2_us"] = time_json(t2_us);
  nlohmann::ordered_json d = nlohmann::ordered_json::object();
  for (const auto& [k, v] : durations_ns) d[std::string(gate_name(k))] = v;
  j["durations_ns"] = d;
  j["enabled"] = enabled;
  return j.dump(2);
}

void NoiseModel::validate() const {
  if (!(t1_us > 0) || !(t2_us > 0) || std::isnan(t1_us) || std::isnan(t2_us)) {
    throw ValidationError("T1 and T2 must be positive");
  }
  if (std::isinf(t2_us)) throw ValidationError("T2 must be finite");
  if (t2_us > 2.0 * t1_us) {
    throw ValidationError(fmt::format(
        "unphysical coherence times: T2 = {} us exceeds 2*T1 = {} us", t2_us,
        2.0 * t1_us));
  }
  for (const auto& [k, v] : durations_ns) {
    if (!(v > 0) || !std::isfinite(v)) {
      throw ValidationError(fmt::format("duration of {} must be positive", gate_name(k)));
    }
  }
}

double NoiseModel::t2_prime_us() const {
  return 1.0 / (1.0 / t2_us + 1.0 / (2.0 * t1_us));
}

double NoiseModel::duration_ns(GateKind kind) const {
  const auto it = durations_ns.find(kind);
  if (it == durations_ns.end()) {
    throw ValidationError(fmt::format("no duration defined for {} gates", gate_name(kind)));
  }
  return it->second;
}

double NoiseModel::amplitude_damping_probability(double t_ns) const {
  return -std::expm1(-t_ns / (1000.0 * t1_us));
}

double NoiseModel::dephasing_probability(double t_ns) const {
  return -std::expm1(-2.0 * t_ns / (1000.0 * t2_us));
}

std::array<Mat2, 2> amplitude_damping_kraus(double p) {
  if (p < 0 || p > 1) throw ValidationError("damping probability outside [0, 1]");
  return {Mat2{1.0, 0.0, 0.0, std::sqrt(1.0 - p)},
          Mat2{0.0, std::sqrt(p), 0.0, 0.0}};
}

std::array<Mat2, 2> dephasing_kraus(double p) {
  if (p < 0 || p > 1) throw ValidationError("dephasing probability outside [0, 1]");
  return {Mat2{1.0, 0.0, 0.0, std::sqrt(1.0 - p)},
          Mat2{0.0, 0.0, 0.0, std::sqrt(p)}};
}

double Schedule::idle_time(std::size_t qubit) const {
  double t = 0;
  for (const auto& iv : idle.at(qubit)) t += iv.length();
  return t;
}

Schedule schedule_circuit(const ParameterizedCircuit& c, const NoiseModel& nm) {
  const std::size_t n = c.n_qubits();
  Schedule s;
  s.idle.resize(n);
  std::vector<double> free_at(n, 0.0);
  std::vector<bool> started(n, false);
  s.gates.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    double start = 0;
    for (std::size_t k = 0; k < g.arity(); ++k) {
      start = std::max(start, free_at[g.qubits[k]]);
    }
    const double dur = nm.duration_ns(g.kind);
    for (std::size_t k = 0; k < g.arity(); ++k) {
      const std::size_t q = g.qubits[k];
      if (start - free_at[q] > kTimeTolerance) {
        s.idle[q].push_back({free_at[q], start, !started[q]});
      }
      started[q] = true;
      free_at[q] = start + dur;
    }
    s.gates.push_back({i, start, dur});
    s.end_ns = std::max(s.end_ns, start + dur);
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (s.end_ns - free_at[q] > kTimeTolerance) {
      s.idle[q].push_back({free_at[q], s.end_ns, !started[q]});
    }
  }
  return s;
}

DensityMatrix run_density_matrix(const ParameterizedCircuit& c,
                                 const NoiseModel& nm, std::size_t qubit_cap) {
  if (!c.is_bound()) throw ValidationError("circuit has unbound parameters");
  DensityMatrix rho = DensityMatrix::zero(c.n_qubits(), qubit_cap);
  if (!nm.enabled) {
    rho.apply(c);
    return rho;
  }
  nm.validate();
  const Schedule s = schedule_circuit(c, nm);
  std::vector<std::size_t> next_idle(c.n_qubits(), 0);
  auto consume = [&](std::size_t q, double until) {
    auto& k = next_idle[q];
    while (k < s.idle[q].size() && s.idle[q][k].end_ns <= until + kTimeTolerance) {
      const IdleInterval& iv = s.idle[q][k++];
      if (iv.leading) continue;
      rho.apply_idle(q, nm.amplitude_damping_probability(iv.length()),
                     nm.dephasing_probability(iv.length()));
    }
  };
  for (const auto& sg : s.gates) {
    const Gate& g = c.gates()[sg.gate_index];
    for (std::size_t k = 0; k < g.arity(); ++k) consume(g.qubits[k], sg.start_ns);
    rho.apply(g);
  }
  for (std::size_t q = 0; q < c.n_qubits(); ++q) consume(q, s.end_ns);
  return rho;
}

}  // namespace vqesim
