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


// Operator-algebra microbenchmarks: Pauli products, Jordan-Wigner mapping
// of molecular Hamiltonians, qubit-wise commuting grouping.

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "vqesim/fermion.hpp"
#include "vqesim/integrals.hpp"
#include "vqesim/measurement.hpp"
#include "vqesim/pauli.hpp"

namespace {

vqesim::MolecularIntegrals molecule(const char* stem) {
  return vqesim::load_fcidump(std::string(VQESIM_BENCH_DATA_DIR) + "/" + stem + ".fcidump");
}

vqesim::PauliSum random_sum(std::size_t n_qubits, std::size_t n_terms, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  vqesim::PauliSum s(n_qubits);
  for (std::size_t t = 0; t < n_terms; ++t) {
    std::string word(n_qubits, 'I');
    for (auto& c : word) c = "IXYZ"[letter(gen)];
    s.accumulate(vqesim::key_from_letters(word), coeff(gen));
  }
  s.simplify();
  return s;
}

void BM_PauliSumProduct(benchmark::State& state) {
  const auto n_terms = static_cast<std::size_t>(state.range(0));
  const auto a = random_sum(12, n_terms, 1);
  const auto b = random_sum(12, n_terms, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PauliSumProduct)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_JordanWignerHamiltonian(benchmark::State& state) {
  static const char* stems[] = {"h2_sto3g", "h4_chain_sto3g", "lih_sto3g"};
  const auto m = molecule(stems[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(vqesim::qubit_hamiltonian(m));
  state.SetLabel(stems[state.range(0)]);
}
BENCHMARK(BM_JordanWignerHamiltonian)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_QubitwiseGroups(benchmark::State& state) {
  const auto h = vqesim::qubit_hamiltonian(molecule("lih_sto3g"));
  for (auto _ : state) benchmark::DoNotOptimize(vqesim::qubitwise_groups(h));
  state.counters["terms"] = static_cast<double>(h.size());
}
BENCHMARK(BM_QubitwiseGroups)->Unit(benchmark::kMillisecond);

}  // namespace
