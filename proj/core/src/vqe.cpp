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

#include "vqesim/vqe.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "json.hpp"
#include "vqesim/error.hpp"
#include "vqesim/rng.hpp"

namespace vqesim {

namespace {

constexpr std::uint64_t kInitialGuessStream = 0;
constexpr std::uint64_t kPerturbationStream = 1;

double quantile(const std::vector<double>& sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

InitialGuessKind initial_guess_from_name(std::string_view name) {
  if (name == "zeros") return InitialGuessKind::zeros;
  if (name == "random" || name == "random_uniform") return InitialGuessKind::random_uniform;
  if (name == "mp2") return InitialGuessKind::mp2;
  if (name == "explicit") return InitialGuessKind::explicit_vector;
  throw ValidationError(fmt::format("unknown initial guess '{}'", name));
}

std::string_view initial_guess_name(InitialGuessKind kind) {
  switch (kind) {
    case InitialGuessKind::zeros: return "zeros";
    case InitialGuessKind::random_uniform: return "random_uniform";
    case InitialGuessKind::mp2: return "mp2";
    case InitialGuessKind::explicit_vector: return "explicit";
  }
  return "zeros";
}

void VqeConfig::validate(std::size_t n_parameters) const {
  if (max_iterations < 1) throw ValidationError("max_iterations must be >= 1");
  if (!(rho_begin > 0) || !(rho_end > 0) || rho_end > rho_begin) {
    throw ValidationError("need 0 < rho_end <= rho_begin");
  }
  if (!(init_perturbation >= 0)) throw ValidationError("init_perturbation must be >= 0");
  if ((initial_guess == InitialGuessKind::mp2 ||
       initial_guess == InitialGuessKind::explicit_vector) &&
      reference_theta.size() != n_parameters) {
    throw ValidationError(fmt::format(
        "initial guess '{}' has {} values but the ansatz has {} parameters",
        initial_guess_name(initial_guess), reference_theta.size(), n_parameters));
  }
  if (noise) noise->validate();
}

Statevector Ansatz::state(std::span<const double> theta) const {
  if (fast_path) return fast_path->run(theta);
  return run_statevector(vqesim::bind(circuit, theta));
}

EnergyFunction::EnergyFunction(const Ansatz& ansatz, const PauliSum& h,
                               double e_core, const VqeConfig& cfg,
                               std::uint64_t seed)
    : ansatz_(ansatz), h_(h), e_core_(e_core), cfg_(cfg), seed_(seed) {
  if (h.n_qubits() != ansatz.circuit.n_qubits()) {
    throw ValidationError(fmt::format(
        "Hamiltonian acts on {} qubits but the ansatz has {}", h.n_qubits(),
        ansatz.circuit.n_qubits()));
  }
}

double EnergyFunction::operator()(std::span<const double> theta) {
  const std::uint64_t shot_seed = derive_seed(seed_, calls_);
  ++calls_;
  double e = 0;
  if (cfg_.noise) {
    const DensityMatrix rho =
        run_density_matrix(vqesim::bind(ansatz_.circuit, theta), *cfg_.noise);
    e = cfg_.n_shots == 0 ? expectation_exact(rho, h_)
                          : expectation_sampled(rho, h_, cfg_.n_shots, shot_seed,
                                                cfg_.sampling);
  } else {
    const Statevector psi = ansatz_.state(theta);
    e = cfg_.n_shots == 0 ? expectation_exact(psi, h_)
                          : expectation_sampled(psi, h_, cfg_.n_shots, shot_seed,
                                                cfg_.sampling);
  }
  return e_core_ + e;
}

double EnergyFunction::exact(std::span<const double> theta) const {
  return e_core_ + expectation_exact(ansatz_.state(theta), h_);
}

std::vector<double> initial_parameters(const VqeConfig& cfg,
                                       std::size_t n_parameters,
                                       std::uint64_t seed) {
  std::vector<double> x(n_parameters, 0.0);
  switch (cfg.initial_guess) {
    case InitialGuessKind::zeros:
      break;
    case InitialGuessKind::random_uniform: {
      Rng rng(derive_seed(seed, kInitialGuessStream));
      for (auto& v : x) v = rng.uniform_left_open(-std::numbers::pi, std::numbers::pi);
      break;
    }
    case InitialGuessKind::mp2:
    case InitialGuessKind::explicit_vector: {
      if (cfg.reference_theta.size() != n_parameters) {
        throw ValidationError("reference_theta length does not match the ansatz");
      }
      x = cfg.reference_theta;
      if (cfg.init_perturbation > 0) {
        Rng rng(derive_seed(seed, kPerturbationStream));
        for (auto& v : x) v += cfg.init_perturbation * (2.0 * rng.uniform() - 1.0);
      }
      break;
    }
  }
  return x;
}

VqeResult minimize(const Ansatz& ansatz, const PauliSum& h, double e_core,
                   const VqeConfig& cfg) {
  const std::size_t n = ansatz.n_parameters();
  cfg.validate(n);
  if (ansatz.fast_path && ansatz.fast_path->n_parameters != n) {
    throw ValidationError("fast path and circuit disagree on the parameter count");
  }
  EnergyFunction energy(ansatz, h, e_core, cfg, cfg.rng_seed);
  VqeResult out;
  out.seed = cfg.rng_seed;
  out.initial_theta = initial_parameters(cfg, n, cfg.rng_seed);
  OptimizerSettings settings;
  settings.max_evaluations = cfg.max_iterations;
  settings.rho_begin = cfg.rho_begin;
  settings.rho_end = cfg.rho_end;
  OptimizeResult r = minimize_with(
      cfg.optimizer, [&energy](std::span<const double> t) { return energy(t); },
      out.initial_theta, settings);
  out.best_energy = r.f;
  out.best_theta = std::move(r.x);
  out.n_evaluations = r.n_evaluations;
  out.converged = r.converged;
  out.initial_energy = r.trace.front();
  if (cfg.record_trace) out.energy_trace = std::move(r.trace);
  return out;
}

VqeResult minimize(const ParameterizedCircuit& c, const PauliSum& h,
                   double e_core, const VqeConfig& cfg) {
  return minimize(Ansatz{c, std::nullopt}, h, e_core, cfg);
}

EnsembleSummary summarize(std::vector<double> values) {
  if (values.empty()) throw ValidationError("cannot summarize an empty ensemble");
  std::sort(values.begin(), values.end());
  EnsembleSummary s;
  s.n_succeeded = values.size();
  s.min = values.front();
  s.max = values.back();
  s.q1 = quantile(values, 0.25);
  s.median = quantile(values, 0.5);
  s.q3 = quantile(values, 0.75);
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double ss = 0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
  return s;
}

TrialEnsemble run_trials(const Ansatz& ansatz, const PauliSum& h, double e_core,
                         const VqeConfig& base, std::size_t n_trials,
                         std::size_t jobs) {
  if (n_trials < 1) throw ValidationError("n_trials must be >= 1");
  base.validate(ansatz.n_parameters());
  TrialEnsemble ens;
  ens.trials.resize(n_trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < n_trials; i = next++) {
      TrialRecord& rec = ens.trials[i];
      rec.index = i;
      rec.seed = derive_seed(base.rng_seed, i);
      try {
        VqeConfig cfg = base;
        cfg.rng_seed = rec.seed;
        rec.result = minimize(ansatz, h, e_core, cfg);
      } catch (const std::exception& e) {
        rec.error = e.what();
      }
    }
  };
  const std::size_t n_threads = std::clamp<std::size_t>(jobs, 1, n_trials);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<double> best;
  for (const auto& rec : ens.trials) {
    if (rec.result) best.push_back(rec.result->best_energy);
  }
  if (!best.empty()) ens.summary = summarize(std::move(best));
  return ens;
}

std::string ensemble_to_json(const TrialEnsemble& e, bool include_traces,
                             int indent) {
  nlohmann::ordered_json j;
  auto trials = nlohmann::ordered_json::array();
  for (const auto& rec : e.trials) {
    nlohmann::ordered_json t;
    t["index"] = rec.index;
    t["seed"] = rec.seed;
    if (rec.result) {
      const auto& r = *rec.result;
      t["best_energy"] = r.best_energy;
      t["initial_energy"] = r.initial_energy;
      t["n_evaluations"] = r.n_evaluations;
      t["converged"] = r.converged;
      t["best_theta"] = r.best_theta;
      if (include_traces) t["trace"] = r.energy_trace;
    } else {
      t["error"] = rec.error;
    }
    trials.push_back(std::move(t));
  }
  j["trials"] = std::move(trials);
  if (e.summary) {
    const auto& s = *e.summary;
    j["summary"] = {{"n_succeeded", s.n_succeeded}, {"min", s.min},
                    {"q1", s.q1},                   {"median", s.median},
                    {"q3", s.q3},                   {"max", s.max},
                    {"mean", s.mean},               {"std", s.stddev}};
  } else {
    j["summary"] = nullptr;
  }
  return j.dump(indent);
}

}  // namespace vqesim
