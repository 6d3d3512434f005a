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
 * Command-line front end: geometry emission, exact references and VQE
 * campaigns (single point, T1 sweep, shot-count sweep, FCIDUMP-list sweep).
 *
 * Everything the `vqesim` executable does is reachable through run_cli(),
 * so the test suite drives the same code path as the binary.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vqesim/ansatz.hpp"
#include "vqesim/integrals.hpp"
#include "vqesim/pauli.hpp"
#include "vqesim/vqe.hpp"

namespace vqesim::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "VQESIM_OUT_DIR";

/// Input integrals plus the orbital-freezing choice.
struct ProblemSpec {
  std::filesystem::path fcidump;
  /// Optional JSON with "noons" / "orbital_energies". When empty,
  /// `<fcidump stem>.json` next to the FCIDUMP is used if it exists.
  std::filesystem::path sidecar;
  std::optional<double> eps1;
  std::optional<double> eps2;
  /// Explicit active orbitals (takes precedence over eps1/eps2).
  std::vector<std::size_t> active;
  /// Doubly occupied frozen orbitals to go with `active`.
  std::vector<std::size_t> frozen;

  void validate() const;
};

/// A prepared qubit problem.
struct Problem {
  MolecularIntegrals full;
  ActiveSpace active_space;
  MolecularIntegrals frozen;
  PauliSum hamiltonian;
  double e_core = 0.0;
  std::size_t n_qubits = 0;
  std::size_t n_electrons = 0;
  /// Energy of the Hartree-Fock determinant (lowest spin orbitals filled).
  double hf_energy = 0.0;
};

Problem prepare_problem(const ProblemSpec& spec);

struct AnsatzSpec {
  std::string family = "qucc";  ///< "he" or "qucc"
  std::string variant = "v3";   ///< HE variant
  std::size_t depth = 1;        ///< HE depth
  bool spin_conserving = false; ///< qUCC excitation filter

  void validate() const;
};

/// The ansatz together with the MP2 starting vector (qUCC only; empty for
/// HE ansätze).
struct PreparedAnsatz {
  Ansatz ansatz;
  std::vector<double> mp2_theta;
};

PreparedAnsatz prepare_ansatz(const Problem& p, const AnsatzSpec& spec);

enum class SweepAxis { none, t1, shots, fcidump_list };

std::string_view sweep_axis_name(SweepAxis axis);

/// One campaign: a fixed problem/ansatz/config and an optional sweep axis.
struct CampaignSpec {
  ProblemSpec problem;
  AnsatzSpec ansatz;
  VqeConfig vqe;
  /// "zeros", "random", "mp2" or "explicit".
  std::string init = "auto";
  std::vector<double> explicit_theta;
  std::size_t n_trials = 1;
  std::size_t jobs = 1;
  /// Noise switched on with these times (µs) unless t1_us is absent.
  std::optional<double> t1_us;
  std::optional<double> t2_us;
  std::filesystem::path noise_file;
  SweepAxis axis = SweepAxis::none;
  std::vector<double> t1_list;
  std::vector<std::size_t> shots_list;
  std::vector<std::filesystem::path> fcidump_list;
  std::vector<double> params;
  bool include_traces = false;
  std::filesystem::path out_dir;

  /// Exactly one sweep axis, files exist, list lengths match.
  void validate() const;
  /// Canonical JSON of every field that influences results (output
  /// directory and job count excluded).
  std::string canonical_json() const;
};

/// 64-bit FNV-1a, used for the provenance spec hash.
std::uint64_t fnv1a64(std::string_view bytes);

struct SweepPointOutcome {
  double sweep_value = 0.0;
  std::optional<EnsembleSummary> summary;
  double reference_energy = 0.0;
  double initial_energy = 0.0;
  double hf_energy = 0.0;
  std::string error;
  /// The failure was a configuration problem (ValidationError), not a
  /// numerical or runtime one.
  bool invalid_input = false;
};

/// Runs every sweep point and writes `point_<k>.json`, `summary.csv` and
/// `campaign.json` into spec.out_dir.
std::vector<SweepPointOutcome> run_campaign(const CampaignSpec& spec,
                                            std::ostream& log);

/// CSV header shared by every campaign summary.
std::string campaign_csv_header();

/// argv-style entry point used by the executable and by tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vqesim::cli
