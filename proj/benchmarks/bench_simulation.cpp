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


// Simulation microbenchmarks: statevector and density-matrix circuit
// execution, energy evaluation and exact diagonalization.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "vqesim/ansatz.hpp"
#include "vqesim/density_matrix.hpp"
#include "vqesim/exact.hpp"
#include "vqesim/fermion.hpp"
#include "vqesim/integrals.hpp"
#include "vqesim/measurement.hpp"
#include "vqesim/noise.hpp"
#include "vqesim/statevector.hpp"
#include "vqesim/vqe.hpp"

namespace {

vqesim::MolecularIntegrals molecule(const char* stem) {
  return vqesim::load_fcidump(std::string(VQESIM_BENCH_DATA_DIR) + "/" + stem + ".fcidump");
}

std::vector<double> random_angles(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<double> theta(n);
  for (auto& t : theta) t = u(gen);
  return theta;
}

void BM_StatevectorHardwareEfficient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = vqesim::build_he(vqesim::HeVariant::v3, n, 2);
  const auto bound = vqesim::bind(c, random_angles(c.n_parameters(), 3));
  for (auto _ : state) benchmark::DoNotOptimize(vqesim::run_statevector(bound));
  state.counters["gates"] = static_cast<double>(bound.size());
}
BENCHMARK(BM_StatevectorHardwareEfficient)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

/// qUCC on H4 through the gate list and through the Pauli-rotation fast path.
void BM_QuccState(benchmark::State& state) {
  const auto m = molecule("h4_chain_sto3g");
  const auto g = vqesim::build_qucc_generator(m);
  const vqesim::Ansatz ansatz{vqesim::trotterize_qucc(g),
                              state.range(0) ? std::optional(vqesim::qucc_rotation_program(g)) : std::nullopt};
  const auto theta = random_angles(g.n_parameters(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(ansatz.state(theta));
  state.SetLabel(state.range(0) ? "fast path" : "gates");
}
BENCHMARK(BM_QuccState)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_ExpectationExact(benchmark::State& state) {
  const auto m = molecule(state.range(0) ? "lih_sto3g" : "h4_chain_sto3g");
  const auto h = vqesim::qubit_hamiltonian(m);
  const auto c = vqesim::build_he(vqesim::HeVariant::v1, h.n_qubits(), 2);
  const auto psi = vqesim::run_statevector(vqesim::bind(c, random_angles(c.n_parameters(), 5)));
  for (auto _ : state) benchmark::DoNotOptimize(vqesim::expectation_exact(psi, h));
  state.counters["terms"] = static_cast<double>(h.size());
}
BENCHMARK(BM_ExpectationExact)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_ExpectationSampled(benchmark::State& state) {
  const auto h = vqesim::qubit_hamiltonian(molecule("h4_chain_sto3g"));
  const auto c = vqesim::build_he(vqesim::HeVariant::v1, h.n_qubits(), 2);
  const auto psi = vqesim::run_statevector(vqesim::bind(c, random_angles(c.n_parameters(), 6)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vqesim::expectation_sampled(psi, h, static_cast<std::size_t>(state.range(0)), ++seed,
                                                         {.group_qubitwise = true}));
  }
}
BENCHMARK(BM_ExpectationSampled)->Arg(1024)->Arg(8192)->Unit(benchmark::kMillisecond);

void BM_NoisyDensityMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = vqesim::build_he(vqesim::HeVariant::v3, n, 1);
  const auto bound = vqesim::bind(c, random_angles(c.n_parameters(), 7));
  vqesim::NoiseModel nm;
  nm.t1_us = 80.0;
  nm.t2_us = 80.0;
  for (auto _ : state) benchmark::DoNotOptimize(vqesim::run_density_matrix(bound, nm));
}
BENCHMARK(BM_NoisyDensityMatrix)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

/// Dense diagonalization against restarted Lanczos on the same Hamiltonian.
void BM_GroundState(benchmark::State& state) {
  const auto m = molecule("lih_sto3g");
  const auto h = vqesim::qubit_hamiltonian(m);
  vqesim::ExactOptions opt;
  if (state.range(0)) opt.dense_qubit_cap = 0;
  for (auto _ : state) benchmark::DoNotOptimize(vqesim::ground_state(h, m.n_electrons, m.e_core, opt));
  state.SetLabel(state.range(0) ? "lanczos" : "dense");
}
BENCHMARK(BM_GroundState)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
