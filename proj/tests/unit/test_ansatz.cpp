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


#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vqesim/ansatz.hpp"
#include "vqesim/error.hpp"
#include "vqesim/fermion.hpp"
#include "vqesim/integrals.hpp"
#include "vqesim/measurement.hpp"
#include "vqesim/statevector.hpp"

namespace {

using vqesim::Gate;
using vqesim::GateKind;
using vqesim::HeVariant;
using vqesim::MolecularIntegrals;
using vqesim::ParameterizedCircuit;
using vqesim::ValidationError;

MolecularIntegrals fixture(const std::string& stem) {
  auto m = vqesim::load_fcidump((oracle::data_dir() / (stem + ".fcidump")).string());
  vqesim::apply_sidecar(m, vqesim::load_sidecar((oracle::data_dir() / (stem + ".json")).string()));
  return m;
}

std::vector<double> random_theta(std::size_t n, double norm, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> g;
  std::vector<double> t(n);
  double s = 0.0;
  for (auto& v : t) {
    v = g(gen);
    s += v * v;
  }
  for (auto& v : t) v *= norm / std::sqrt(s);
  return t;
}

std::size_t count_rotations(const ParameterizedCircuit& c) {
  std::size_t n = 0;
  for (const auto& g : c.gates()) n += vqesim::is_rotation(g.kind) ? 1 : 0;
  return n;
}

oracle::Mat ladder_generator_matrix(const vqesim::FermionOperator& f) {
  const std::size_t n = f.n_modes();
  oracle::Mat m = oracle::Mat::Zero(std::size_t{1} << n, std::size_t{1} << n);
  for (const auto& term : f.terms()) {
    oracle::Mat p = oracle::identity(std::size_t{1} << n);
    for (const auto& op : term.ops) {
      p = p * (op.dagger ? oracle::creation(op.mode, n) : oracle::annihilation(op.mode, n));
    }
    m += term.coeff * p;
  }
  return m;
}

/// Dense oracle for the whole Trotter product applied to the HF determinant.
oracle::Vec trotter_oracle(const vqesim::QuccGenerator& g, const std::vector<double>& theta) {
  const std::size_t n = g.n_qubits;
  const std::uint64_t hf = (std::uint64_t{1} << g.n_electrons) - 1;
  oracle::Vec v = oracle::Vec::Unit(std::size_t{1} << n, static_cast<Eigen::Index>(hf));
  for (std::size_t k = 0; k < g.excitations.size(); ++k) {
    const oracle::Mat gk = ladder_generator_matrix(g.excitations[k].generator(n));
    v = (theta[k] * gk).exp() * v;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Hardware-efficient ansätze

TEST(HardwareEfficient, CaptionExamples) {
  EXPECT_EQ(vqesim::build_he(HeVariant::v3, 4, 1).n_parameters(), 20u);
  EXPECT_EQ(vqesim::build_he(HeVariant::v1, 4, 2).n_parameters(), 8u);
  const auto v2 = vqesim::build_he(HeVariant::v2, 8, 1);
  EXPECT_EQ(v2.n_parameters(), 8u);
  for (std::size_t q = 0; q < 8; ++q) EXPECT_EQ(v2.gates()[q], Gate::single(GateKind::H, q));
}

TEST(HardwareEfficient, ParameterCountFormulas) {
  for (std::size_t n : {4u, 8u, 12u, 16u})
    for (std::size_t d : {1u, 2u, 3u}) {
      const std::size_t linear = d * n, v3 = 2 * d * (3 * n - 2);
      for (auto [v, expected] : {std::pair{HeVariant::v1, linear}, std::pair{HeVariant::v2, linear},
                                 std::pair{HeVariant::v3, v3}}) {
        const auto c = vqesim::build_he(v, n, d);
        EXPECT_EQ(c.n_parameters(), expected);
        EXPECT_EQ(vqesim::he_parameter_count(v, n, d), expected);
        EXPECT_EQ(count_rotations(c), expected);
        EXPECT_NO_THROW(c.validate());
        EXPECT_EQ(c.depth(), d);
      }
    }
}

TEST(HardwareEfficient, V1Layout) {
  const auto c = vqesim::build_he(HeVariant::v1, 4, 1);
  std::vector<Gate> expected = {Gate::single(GateKind::H, 0), Gate::single(GateKind::H, 1)};
  for (std::size_t q = 0; q < 4; ++q) {
    expected.push_back(Gate::rotation(q % 2 == 0 ? GateKind::RY : GateKind::RX, q, vqesim::SymbolicAngle{q, 1.0}));
  }
  expected.push_back(Gate::cnot(0, 2));
  expected.push_back(Gate::cnot(1, 3));
  expected.push_back(Gate::cnot(0, 1));
  expected.push_back(Gate::cnot(2, 3));
  EXPECT_EQ(c.gates(), expected);
}

TEST(HardwareEfficient, V3LayoutOnTwoQubits) {
  const auto c = vqesim::build_he(HeVariant::v3, 2, 1);
  std::vector<GateKind> kinds;
  for (const auto& g : c.gates()) kinds.push_back(g.kind);
  using K = GateKind;
  const std::vector<GateKind> expected = {K::H,  K::H,  K::RY, K::RX, K::RY, K::RX,
                                          K::CNOT, K::RY, K::RX, K::RY, K::RX};
  EXPECT_EQ(kinds, expected);
  EXPECT_EQ(c.n_parameters(), 8u);
}

TEST(HardwareEfficient, Errors) {
  EXPECT_THROW(vqesim::build_he(HeVariant::v1, 3, 1), ValidationError);
  EXPECT_THROW(vqesim::build_he(HeVariant::v2, 4, 0), ValidationError);
  EXPECT_THROW(vqesim::he_variant_from_name("v4"), ValidationError);
  EXPECT_EQ(vqesim::he_variant_from_name("v2"), HeVariant::v2);
}

// ---------------------------------------------------------------------------
// qUCC generator

TEST(QuccGenerator, FourSpinOrbitalsTwoElectrons) {
  const auto g = vqesim::build_qucc_generator(4, 2);
  EXPECT_EQ(g.occupied(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(g.unoccupied(), (std::vector<std::size_t>{2, 3}));
  // Doubles first, then singles in lexicographic order.
  std::vector<vqesim::Excitation> expected = {
      {{3, 2}, {1, 0}}, {{2}, {0}}, {{2}, {1}}, {{3}, {0}}, {{3}, {1}}};
  EXPECT_EQ(g.excitations, expected);
  // Spin filter: only α→α (0→2) and β→β (1→3) singles survive; the
  // αβ→αβ double is kept.
  const auto s = vqesim::build_qucc_generator(4, 2, {.spin_conserving = true});
  expected = {{{3, 2}, {1, 0}}, {{2}, {0}}, {{3}, {1}}};
  EXPECT_EQ(s.excitations, expected);
}

TEST(QuccGenerator, ExcitationCountsMatchCombinatorics) {
  for (std::size_t n = 2; n <= 8; n += 2)
    for (std::size_t e = 1; e < n; ++e) {
      const std::size_t u = n - e;
      const auto g = vqesim::build_qucc_generator(n, e);
      EXPECT_EQ(g.n_parameters(), u * e + (u * (u - 1) / 2) * (e * (e - 1) / 2));
    }
}

TEST(QuccGenerator, ZeroThetaGivesZeroOperator) {
  const auto g = vqesim::build_qucc_generator(8, 4);
  EXPECT_TRUE(g.operator_at(std::vector<double>(g.n_parameters(), 0.0)).is_zero());
}

TEST(QuccGenerator, GeneratorIsAntiHermitian) {
  const auto g = vqesim::build_qucc_generator(6, 2);
  const auto t = g.operator_at(random_theta(g.n_parameters(), 1.0, 3));
  EXPECT_TRUE(t.is_anti_hermitian());
  EXPECT_TRUE((t + t.adjoint()).is_zero());
  for (const auto& ex : g.excitations) EXPECT_TRUE(ex.generator(6).is_anti_hermitian());
}

TEST(QuccGenerator, Errors) {
  EXPECT_THROW(vqesim::build_qucc_generator(4, 0), ValidationError);
  EXPECT_THROW(vqesim::build_qucc_generator(4, 5), ValidationError);
  const auto g = vqesim::build_qucc_generator(4, 2);
  EXPECT_THROW(g.operator_at(std::vector<double>{0.1}), ValidationError);
}

TEST(QuccAmplitudes, ValidateAndThetaMapping) {
  vqesim::QuccAmplitudes a;
  a.doubles[{3, 2, 1, 0}] = 0.25;
  a.singles[{3, 1}] = -0.5;
  EXPECT_NO_THROW(a.validate());
  const auto g = vqesim::build_qucc_generator(4, 2);
  EXPECT_EQ(g.theta_from(a), (std::vector<double>{0.25, 0.0, 0.0, 0.0, -0.5}));
  vqesim::QuccAmplitudes bad;
  bad.singles[{1, 1}] = 0.1;
  EXPECT_THROW(bad.validate(), ValidationError);
  vqesim::QuccAmplitudes overlap;
  overlap.doubles[{3, 1, 1, 0}] = 0.1;
  EXPECT_THROW(overlap.validate(), ValidationError);
  vqesim::QuccAmplitudes nan;
  nan.doubles[{3, 2, 1, 0}] = std::nan("");
  EXPECT_THROW(nan.validate(), ValidationError);
}

// ---------------------------------------------------------------------------
// MP2 amplitudes

TEST(Mp2, SinglesAreZero) {
  for (const std::string stem : {"h2_sto3g", "h4_chain_sto3g"}) {
    const auto m = fixture(stem);
    const auto g = vqesim::build_qucc_generator(m);
    const auto a = vqesim::mp2_initial_amplitudes(m, g);
    for (const auto& [k, v] : a.singles) EXPECT_EQ(v, 0.0);
    const auto theta = g.theta_from(a);
    for (std::size_t k = 0; k < g.n_parameters(); ++k)
      if (!g.excitations[k].is_double()) EXPECT_EQ(theta[k], 0.0);
  }
}

TEST(Mp2, TwoOrbitalHandEvaluation) {
  // Only the αβ→αβ double (3,2 ← 1,0) exists. In spin orbitals
  // h_3210 = (3 0|2 1) vanishes by spin and h_3201 = (1 0|1 0) = K, so
  // θ = (0 − K) / (2ε0 − 2ε1).
  const auto m = fixture("h2_sto3g");
  const auto g = vqesim::build_qucc_generator(m);
  const auto a = vqesim::mp2_initial_amplitudes(m, g);
  const auto& eps = *m.orbital_energies;
  const double k = m.chemist(1, 0, 1, 0);
  ASSERT_EQ(a.doubles.size(), 1u);
  EXPECT_NEAR(a.doubles.at({3, 2, 1, 0}), -k / (2 * eps[0] - 2 * eps[1]), 1e-14);
  EXPECT_GT(std::abs(a.doubles.at({3, 2, 1, 0})), 1e-3);
}

TEST(Mp2, SymmetricNumeratorGivesZero) {
  auto m = MolecularIntegrals::zeros(2, 2);
  m.one(0, 0) = -1.0;
  m.one(1, 1) = -0.2;
  m.orbital_energies = std::vector<double>{-0.6, 0.4};
  // Coulomb only: exchange (10|10) = 0, hence h_pqrs = h_pqsr = 0 for the
  // single double excitation.
  m.two(0, 0, 1, 1) = m.two(1, 1, 0, 0) = 0.5;
  m.two(0, 0, 0, 0) = m.two(1, 1, 1, 1) = 0.6;
  const auto g = vqesim::build_qucc_generator(m);
  const auto a = vqesim::mp2_initial_amplitudes(m, g);
  EXPECT_EQ(a.doubles.at({3, 2, 1, 0}), 0.0);
}

TEST(Mp2, DegenerateDenominatorWarnsAndZeroes) {
  auto m = fixture("h2_sto3g");
  m.orbital_energies = std::vector<double>{0.1, 0.1};
  const auto g = vqesim::build_qucc_generator(m);
  const auto a = vqesim::mp2_initial_amplitudes(m, g);
  EXPECT_EQ(a.doubles.at({3, 2, 1, 0}), 0.0);
  EXPECT_FALSE(a.warnings.empty());
}

TEST(Mp2, NeedsOrbitalEnergies) {
  auto m = fixture("h2_sto3g");
  m.orbital_energies.reset();
  EXPECT_THROW(vqesim::mp2_initial_amplitudes(m, vqesim::build_qucc_generator(m)), ValidationError);
}

// ---------------------------------------------------------------------------
// Trotterized circuits

TEST(Trotter, ZeroThetaPreparesHartreeFock) {
  for (const std::string stem : {"h2_sto3g", "h4_chain_sto3g"}) {
    const auto m = fixture(stem);
    const auto g = vqesim::build_qucc_generator(m);
    const auto c = vqesim::trotterize_qucc(g);
    const auto psi = vqesim::run_statevector(vqesim::bind(c, std::vector<double>(g.n_parameters(), 0.0)));
    const std::uint64_t hf = (std::uint64_t{1} << m.n_electrons) - 1;
    const oracle::Vec expected = oracle::Vec::Unit(psi.dim(), static_cast<Eigen::Index>(hf));
    EXPECT_LT((oracle::to_eigen(psi) - expected).cwiseAbs().maxCoeff(), 1e-14) << stem;
  }
}

TEST(Trotter, SingleExcitationMatchesMatrixExponential) {
  const auto g = vqesim::build_qucc_generator(2, 1);
  ASSERT_EQ(g.n_parameters(), 1u);
  const auto c = vqesim::trotterize_qucc(g);
  const oracle::Mat gen = ladder_generator_matrix(g.excitations[0].generator(2));
  const oracle::Mat x0 = oracle::embed_1q(oracle::pauli_2x2('X'), 0, 2);
  for (double theta : {0.1, 0.7}) {
    const oracle::Mat u = oracle::circuit_unitary(vqesim::bind(c, std::vector<double>{theta}));
    EXPECT_LT((u - (theta * gen).exp() * x0).cwiseAbs().maxCoeff(), 1e-10) << theta;
  }
}

TEST(Trotter, EachFactorIsExactForOneExcitation) {
  // A single double excitation: one factor, no Trotter error.
  vqesim::QuccGenerator g{4, 2, {{{3, 2}, {1, 0}}}};
  const auto c = vqesim::trotterize_qucc(g);
  for (double theta : {0.1, 0.7}) {
    const auto psi = vqesim::run_statevector(vqesim::bind(c, std::vector<double>{theta}));
    EXPECT_LT((oracle::to_eigen(psi) - trotter_oracle(g, {theta})).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Trotter, FullCircuitMatchesOrderedProductOfExponentials) {
  for (const std::string stem : {"h2_sto3g", "h4_chain_sto3g"}) {
    const auto m = fixture(stem);
    const auto g = vqesim::build_qucc_generator(m);
    const auto c = vqesim::trotterize_qucc(g);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto theta = random_theta(g.n_parameters(), 1.0, seed);
      const auto psi = vqesim::run_statevector(vqesim::bind(c, theta));
      EXPECT_LT((oracle::to_eigen(psi) - trotter_oracle(g, theta)).cwiseAbs().maxCoeff(), 1e-10) << stem;
    }
  }
}

TEST(Trotter, RotationProgramMatchesGateCircuit) {
  const auto m = fixture("h4_chain_sto3g");
  const auto g = vqesim::build_qucc_generator(m);
  const auto c = vqesim::trotterize_qucc(g);
  const auto program = vqesim::qucc_rotation_program(g);
  EXPECT_EQ(program.n_parameters, g.n_parameters());
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto theta = random_theta(g.n_parameters(), 2.0, 10 + seed);
    const auto a = vqesim::run_statevector(vqesim::bind(c, theta));
    const auto b = program.run(theta);
    EXPECT_LT((oracle::to_eigen(a) - oracle::to_eigen(b)).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_THROW(program.run(std::vector<double>{0.1}), ValidationError);
}

TEST(Trotter, ConservesParticleNumber) {
  for (const std::string stem : {"h2_sto3g", "h4_chain_sto3g"}) {
    const auto m = fixture(stem);
    const auto g = vqesim::build_qucc_generator(m);
    const auto c = vqesim::trotterize_qucc(g);
    const auto n_op = vqesim::number_operator(g.n_qubits);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto theta = random_theta(g.n_parameters(), 1.0, 50 + seed);
      const auto psi = vqesim::run_statevector(vqesim::bind(c, theta));
      EXPECT_NEAR(vqesim::expectation_exact(psi, n_op), static_cast<double>(m.n_electrons), 1e-10);
    }
  }
}

TEST(Trotter, OnlyFirstOrder) {
  EXPECT_THROW(vqesim::trotterize_qucc(vqesim::build_qucc_generator(4, 2), 2), ValidationError);
}

TEST(PauliExponential, MatchesMatrixExponentialAndInverts) {
  std::mt19937_64 gen(13);
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (int trial = 0; trial < 30; ++trial) {
    std::string word;
    do {
      word.clear();
      for (int q = 0; q < 4; ++q) word += letters[gen() % 4];
    } while (word == "IIII");
    const double angle = 0.21 * trial - 3.0;
    const auto c = vqesim::pauli_exponential(vqesim::key_from_letters(word), 4, angle);
    const oracle::Mat u = oracle::circuit_unitary(c);
    const oracle::Mat ref = (vqesim::cplx(0, -angle / 2) * oracle::pauli_matrix(word)).exp();
    EXPECT_LT((u - ref).cwiseAbs().maxCoeff(), 1e-12) << word;
    const oracle::Mat round_trip = u * oracle::circuit_unitary(vqesim::inverse(c));
    EXPECT_LT((round_trip - oracle::identity(16)).cwiseAbs().maxCoeff(), 1e-12) << word;
  }
  EXPECT_THROW(vqesim::pauli_exponential(vqesim::PauliKey{}, 2, 0.1), ValidationError);
  EXPECT_THROW(vqesim::pauli_exponential(vqesim::key_from_letters("IIX"), 2, 0.1), ValidationError);
}

TEST(HartreeFockCircuit, FlipsLowestQubits) {
  const auto psi = vqesim::run_statevector(vqesim::hartree_fock_circuit(6, 3));
  EXPECT_EQ(psi[0b000111], vqesim::cplx(1.0));
  EXPECT_THROW(vqesim::hartree_fock_circuit(2, 3), ValidationError);
}

}  // namespace
