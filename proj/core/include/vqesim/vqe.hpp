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
 * Variational loop E(θ) = e_core + <ψ(θ)|H|ψ(θ)> and multi-trial ensembles.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqesim/ansatz.hpp"
#include "vqesim/circuit.hpp"
#include "vqesim/measurement.hpp"
#include "vqesim/noise.hpp"
#include "vqesim/optimizer.hpp"
#include "vqesim/pauli.hpp"

namespace vqesim {

enum class InitialGuessKind { zeros, random_uniform, mp2, explicit_vector };

InitialGuessKind initial_guess_from_name(std::string_view name);
std::string_view initial_guess_name(InitialGuessKind kind);

struct VqeConfig {
  /// Objective evaluations allowed per minimization.
  std::size_t max_iterations = 1000;
  OptimizerKind optimizer = OptimizerKind::cobyla;
  /// 0 = exact expectation values.
  std::size_t n_shots = 0;
  SamplingOptions sampling{};
  /// Density-matrix simulation with idle noise when set.
  std::optional<NoiseModel> noise;
  InitialGuessKind initial_guess = InitialGuessKind::zeros;
  /// Starting vector for mp2 / explicit_vector guesses.
  std::vector<double> reference_theta;
  /// Half-width of a uniform perturbation added to mp2 / explicit starts.
  double init_perturbation = 0.0;
  std::uint64_t rng_seed = 0;
  double rho_begin = 0.5;
  double rho_end = 1e-6;
  bool record_trace = true;

  void validate(std::size_t n_parameters) const;
};

struct VqeResult {
  double best_energy = 0.0;
  std::vector<double> best_theta;
  /// Energy of every objective evaluation, in order (empty when traces are
  /// not recorded).
  std::vector<double> energy_trace;
  std::size_t n_evaluations = 0;
  bool converged = false;
  double initial_energy = 0.0;
  std::vector<double> initial_theta;
  std::uint64_t seed = 0;
};

/// A circuit plus an optional unitary-equivalent fast path used for
/// noiseless statevector evaluation.
struct Ansatz {
  ParameterizedCircuit circuit;
  std::optional<PauliRotationProgram> fast_path;

  std::size_t n_parameters() const { return circuit.n_parameters(); }
  /// Noiseless state |ψ(θ)>.
  Statevector state(std::span<const double> theta) const;
};

/// Objective of one VQE run. Deterministic: the k-th call (0-based) with
/// shots uses sampling seed derive_seed(seed, k).
class EnergyFunction {
 public:
  EnergyFunction(const Ansatz& ansatz, const PauliSum& h, double e_core,
                 const VqeConfig& cfg, std::uint64_t seed);

  double operator()(std::span<const double> theta);
  /// Noiseless, exact-expectation energy (the Ritz-bounded quantity).
  double exact(std::span<const double> theta) const;
  std::size_t calls() const { return calls_; }

 private:
  const Ansatz& ansatz_;
  const PauliSum& h_;
  double e_core_;
  const VqeConfig& cfg_;
  std::uint64_t seed_;
  std::size_t calls_ = 0;
};

/// Starting vector per cfg.initial_guess; random draws use
/// Rng(derive_seed(seed, 0)).
std::vector<double> initial_parameters(const VqeConfig& cfg,
                                       std::size_t n_parameters,
                                       std::uint64_t seed);

/// One minimization within cfg.max_iterations evaluations. The returned θ
/// is the argmin of the observed energies. Throws RuntimeError when the
/// energy becomes non-finite.
VqeResult minimize(const Ansatz& ansatz, const PauliSum& h, double e_core,
                   const VqeConfig& cfg);
VqeResult minimize(const ParameterizedCircuit& c, const PauliSum& h,
                   double e_core, const VqeConfig& cfg);

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::optional<VqeResult> result;
  std::string error;  ///< non-empty when the trial failed
};

struct EnsembleSummary {
  std::size_t n_succeeded = 0;
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0, stddev = 0;
};

/// Order statistics with linear interpolation between closest ranks; the
/// standard deviation uses the n-1 denominator (0 for a single value).
EnsembleSummary summarize(std::vector<double> values);

struct TrialEnsemble {
  std::vector<TrialRecord> trials;
  std::optional<EnsembleSummary> summary;  ///< absent when every trial failed
};

/// n_trials independent runs; trial i uses seed derive_seed(base.rng_seed, i).
/// Up to `jobs` trials run concurrently; results are ordered by trial index.
/// A failing trial records its error without aborting the others.
TrialEnsemble run_trials(const Ansatz& ansatz, const PauliSum& h, double e_core,
                         const VqeConfig& base, std::size_t n_trials,
                         std::size_t jobs = 1);

/// JSON text {"trials": [{seed, best_energy, n_evaluations, converged,
/// initial_energy, best_theta, trace?, error?}], "summary": {...}}.
std::string ensemble_to_json(const TrialEnsemble& e, bool include_traces,
                             int indent = 2);

}  // namespace vqesim
