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

#include "vqesim/measurement.hpp"

#include <algorithm>
#include <bit>
#include <numbers>
#include <vector>

#include "vqesim/error.hpp"
#include "vqesim/rng.hpp"

namespace vqesim {

namespace {

void check_operator(std::size_t n_qubits, const PauliSum& h, bool hermitian) {
  if (h.n_qubits() != n_qubits) {
    throw ValidationError("operator and state qubit counts differ");
  }
  if (hermitian && !h.is_hermitian()) {
    throw ValidationError("expectation_exact needs a Hermitian operator");
  }
}

// Gates that rotate the eigenbasis of `basis_key` (letters X/Y/Z on its
// support) onto the computational basis.
std::vector<Gate> basis_rotation(const PauliKey& basis_key, std::size_t n) {
  std::vector<Gate> gates;
  for (std::size_t q = 0; q < n; ++q) {
    const bool x = (basis_key.x >> q) & 1;
    const bool z = (basis_key.z >> q) & 1;
    if (x && z) {
      gates.push_back(Gate::rotation(GateKind::RX, q, std::numbers::pi / 2));
    } else if (x) {
      gates.push_back(Gate::single(GateKind::H, q));
    }
  }
  return gates;
}

std::vector<double> rotated_probabilities(const Statevector& psi,
                                          const PauliKey& basis_key) {
  Statevector s = psi;
  for (const auto& g : basis_rotation(basis_key, psi.n_qubits())) s.apply(g);
  return s.probabilities();
}

std::vector<double> rotated_probabilities(const DensityMatrix& rho,
                                          const PauliKey& basis_key) {
  DensityMatrix r = rho;
  for (const auto& g : basis_rotation(basis_key, rho.n_qubits())) r.apply(g);
  return r.probabilities();
}

std::vector<std::uint64_t> sample_from(const std::vector<double>& probs,
                                       std::size_t n_shots,
                                       std::uint64_t seed) {
  std::vector<double> cdf(probs.size());
  double acc = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += std::max(probs[i], 0.0);
    cdf[i] = acc;
  }
  Rng rng(seed);
  std::vector<std::uint64_t> out(n_shots);
  for (auto& o : out) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    o = static_cast<std::uint64_t>(it - cdf.begin());
  }
  return out;
}

bool qubitwise_compatible(const PauliKey& a, const PauliKey& b) {
  const std::uint64_t both = a.support() & b.support();
  return ((a.x ^ b.x) & both) == 0 && ((a.z ^ b.z) & both) == 0;
}

template <typename State>
double sampled_impl(const State& state, const PauliSum& h, std::size_t n_shots,
                    std::uint64_t seed, SamplingOptions options) {
  if (n_shots == 0) return expectation_exact(state, h);
  check_operator(state.n_qubits(), h, true);
  double energy = h.coefficient(PauliKey{}).real();
  std::vector<std::vector<PauliKey>> groups;
  if (options.group_qubitwise) {
    groups = qubitwise_groups(h);
  } else {
    for (const auto& [k, c] : h.terms()) {
      if (!k.is_identity()) groups.push_back({k});
    }
  }
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    PauliKey basis{};
    for (const auto& k : groups[gi]) {
      basis.x |= k.x;
      basis.z |= k.z;
    }
    const auto probs = rotated_probabilities(state, basis);
    const auto shots = sample_from(probs, n_shots, derive_seed(seed, gi));
    for (const auto& k : groups[gi]) {
      const std::uint64_t support = k.support();
      long long sum = 0;
      for (auto b : shots) sum += (std::popcount(b & support) & 1) ? -1 : 1;
      energy += h.coefficient(k).real() * static_cast<double>(sum) /
                static_cast<double>(n_shots);
    }
  }
  return energy;
}

}  // namespace

double expectation_exact(const Statevector& psi, const PauliSum& h) {
  check_operator(psi.n_qubits(), h, true);
  return expectation_complex(psi, h).real();
}

cplx expectation_complex(const Statevector& psi, const PauliSum& a) {
  check_operator(psi.n_qubits(), a, false);
  const auto& v = psi.amplitudes();
  // <psi|P|psi> = i^{#Y} sum_c (-1)^{|z & c|} conj(v[c ^ x]) v[c]. The Y
  // phase is hoisted out of the loop and diagonal words reuse |v_c|^2.
  std::vector<double> prob;
  cplx total{};
  for (const auto& [key, coeff] : a.terms()) {
    const std::uint64_t z = key.z;
    cplx acc{};
    if (key.x == 0) {
      if (prob.empty()) prob = psi.probabilities();
      double d = 0.0;
      for (std::size_t c = 0; c < prob.size(); ++c) {
        d += (__builtin_popcountll(z & c) & 1) ? -prob[c] : prob[c];
      }
      acc = d;
    } else {
      for (std::size_t c = 0; c < v.size(); ++c) {
        const cplx t = std::conj(v[c ^ key.x]) * v[c];
        acc += (__builtin_popcountll(z & c) & 1) ? -t : t;
      }
      acc *= pauli_basis_action(key, 0);  // i^{#Y}
    }
    total += coeff * acc;
  }
  return total;
}

double expectation_exact(const DensityMatrix& rho, const PauliSum& h) {
  check_operator(rho.n_qubits(), h, true);
  const std::size_t dim = rho.dim();
  const auto& d = rho.data();
  cplx total{};
  for (const auto& [key, coeff] : h.terms()) {
    cplx acc{};
    for (std::size_t c = 0; c < dim; ++c) {
      acc += d[c * dim + (c ^ key.x)] * pauli_basis_action(key, c);
    }
    total += coeff * acc;
  }
  return total.real();
}

double expectation_sampled(const Statevector& psi, const PauliSum& h,
                           std::size_t n_shots, std::uint64_t rng_seed,
                           SamplingOptions options) {
  return sampled_impl(psi, h, n_shots, rng_seed, options);
}

double expectation_sampled(const DensityMatrix& rho, const PauliSum& h,
                           std::size_t n_shots, std::uint64_t rng_seed,
                           SamplingOptions options) {
  return sampled_impl(rho, h, n_shots, rng_seed, options);
}

std::vector<std::uint64_t> sample_bitstrings(const Statevector& psi,
                                             std::size_t n_shots,
                                             std::uint64_t rng_seed) {
  if (n_shots == 0) throw ValidationError("sample_bitstrings needs n_shots > 0");
  return sample_from(psi.probabilities(), n_shots, rng_seed);
}

std::vector<std::uint64_t> sample_bitstrings(const DensityMatrix& rho,
                                             std::size_t n_shots,
                                             std::uint64_t rng_seed) {
  if (n_shots == 0) throw ValidationError("sample_bitstrings needs n_shots > 0");
  return sample_from(rho.probabilities(), n_shots, rng_seed);
}

std::string format_bitstring(std::uint64_t outcome, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if ((outcome >> q) & 1) s[q] = '1';
  }
  return s;
}

std::vector<std::vector<PauliKey>> qubitwise_groups(const PauliSum& h) {
  std::vector<std::vector<PauliKey>> groups;
  for (const auto& [key, c] : h.terms()) {
    if (key.is_identity()) continue;
    bool placed = false;
    for (auto& g : groups) {
      if (std::all_of(g.begin(), g.end(), [&](const PauliKey& k) {
            return qubitwise_compatible(k, key);
          })) {
        g.push_back(key);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({key});
  }
  return groups;
}

}  // namespace vqesim
