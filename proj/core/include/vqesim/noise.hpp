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
 * Idle-noise model: amplitude damping (T1) and pure dephasing (T2) applied
 * to qubits while they wait between gates, with gates themselves ideal.
 *
 * Units: coherence times in microseconds, gate durations in nanoseconds.
 */
#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vqesim/circuit.hpp"
#include "vqesim/density_matrix.hpp"

namespace vqesim {

struct NoiseModel {
  double t1_us = 50.0;  ///< may be +infinity (no relaxation)
  double t2_us = 50.0;
  std::map<GateKind, double> durations_ns = default_durations();
  bool enabled = true;

  /// 60 ns for every single-qubit gate, 150 ns for CNOT.
  static std::map<GateKind, double> default_durations();

  /// JSON object {"t1_us", "t2_us", "durations_ns": {"H": 60, ...},
  /// "enabled"}; absent keys keep their defaults. "inf" is accepted for
  /// t1_us.
  static NoiseModel from_json(std::string_view text);
  static NoiseModel load(const std::string& path);
  std::string to_json() const;

  /// t1, t2 > 0, t2 <= 2 t1, every duration > 0.
  void validate() const;

  /// 1/T2' = 1/T2 + 1/(2 T1).
  double t2_prime_us() const;
  /// Duration of a gate kind; throws ValidationError when undefined.
  double duration_ns(GateKind kind) const;

  /// p_a(t) = 1 - exp(-t/T1).
  double amplitude_damping_probability(double t_ns) const;
  /// p_ph(t) = 1 - exp(-2t/T2).
  double dephasing_probability(double t_ns) const;
};

/// E0 = [[1, 0], [0, sqrt(1-p)]], E1 = [[0, sqrt(p)], [0, 0]].
std::array<Mat2, 2> amplitude_damping_kraus(double p);
/// E0 = [[1, 0], [0, sqrt(1-p)]], E1 = [[0, 0], [0, sqrt(p)]].
std::array<Mat2, 2> dephasing_kraus(double p);

struct ScheduledGate {
  std::size_t gate_index = 0;
  double start_ns = 0;
  double duration_ns = 0;
  double end_ns() const { return start_ns + duration_ns; }
};

struct IdleInterval {
  double start_ns = 0;
  double end_ns = 0;
  /// Before the qubit's first gate. Recorded for bookkeeping but not
  /// subjected to noise: the register is still in its prepared |0>.
  bool leading = false;
  double length() const { return end_ns - start_ns; }
};

struct Schedule {
  std::vector<ScheduledGate> gates;             ///< in circuit order
  std::vector<std::vector<IdleInterval>> idle;  ///< per qubit, time-ordered
  double end_ns = 0;

  /// Total idle time of a qubit, including leading intervals.
  double idle_time(std::size_t qubit) const;
};

/// As-soon-as-possible schedule: each gate starts when all of its qubits
/// are free. Idle intervals are the per-qubit gaps plus the tail up to the
/// global circuit end.
Schedule schedule_circuit(const ParameterizedCircuit& c, const NoiseModel& nm);

/// Ideal gates in schedule order; before each gate, and at circuit end,
/// every non-leading idle interval of the touched qubits is consumed by the
/// combined idle channel for its length. A disabled model gives the pure
/// result |psi><psi|.
DensityMatrix run_density_matrix(
    const ParameterizedCircuit& c, const NoiseModel& nm,
    std::size_t qubit_cap = kDefaultDensityMatrixQubitCap);

}  // namespace vqesim
