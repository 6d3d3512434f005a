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
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "vqesim/ansatz.hpp"
#include "vqesim/circuit.hpp"
#include "vqesim/error.hpp"

namespace {

using vqesim::Gate;
using vqesim::GateKind;
using vqesim::ParameterizedCircuit;
using vqesim::SymbolicAngle;
using vqesim::ValidationError;

constexpr double kPi = std::numbers::pi;

/// |<a, b>| / (|a| |b|) = 1 iff the matrices agree up to a global phase.
double phase_free_overlap(const oracle::Mat& a, const oracle::Mat& b) {
  return std::abs((a.adjoint() * b).trace()) / std::sqrt((a.adjoint() * a).trace().real() *
                                                         (b.adjoint() * b).trace().real());
}

ParameterizedCircuit random_symbolic_circuit(std::size_t n, std::size_t n_gates, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  ParameterizedCircuit c(n);
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  for (std::size_t k = 0; k < n_gates; ++k) {
    const GateKind kind = vqesim::kAllGateKinds[gen() % vqesim::kAllGateKinds.size()];
    if (kind == GateKind::CNOT) {
      const std::size_t a = qubit(gen);
      c.append(Gate::cnot(a, (a + 1 + gen() % (n - 1)) % n));
    } else if (vqesim::is_rotation(kind)) {
      c.append(Gate::rotation(kind, qubit(gen), SymbolicAngle{c.new_parameter(), 1.0}));
    } else {
      c.append(Gate::single(kind, qubit(gen)));
    }
  }
  return c;
}

TEST(Gate, ConstructorsRejectWrongKinds) {
  EXPECT_THROW(Gate::single(GateKind::RX, 0), ValidationError);
  EXPECT_THROW(Gate::rotation(GateKind::H, 0, 0.1), ValidationError);
  EXPECT_THROW(Gate::single(GateKind::H, 0).angle(), ValidationError);
  EXPECT_THROW(Gate::rotation(GateKind::RY, 0, SymbolicAngle{0, 1.0}).angle(), ValidationError);
}

TEST(Gate, NamesRoundTrip) {
  for (GateKind k : vqesim::kAllGateKinds) {
    EXPECT_EQ(vqesim::gate_kind_from_name(vqesim::gate_name(k)), k);
  }
  EXPECT_THROW(vqesim::gate_kind_from_name("SWAP"), ValidationError);
}

TEST(Gate, MatricesMatchTextbookForms) {
  for (GateKind k : vqesim::kAllGateKinds) {
    if (k == GateKind::CNOT) {
      EXPECT_THROW(vqesim::gate_matrix(k), ValidationError);
      continue;
    }
    for (double a : {0.0, 0.3, -1.7, kPi}) {
      const auto m = vqesim::gate_matrix(k, a);
      const oracle::Mat ref = oracle::gate_2x2(k, a);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) EXPECT_LT(std::abs(m[2 * r + c] - ref(r, c)), 1e-15);
    }
  }
}

TEST(Circuit, AppendValidatesQubitsAndArity) {
  ParameterizedCircuit c(2);
  EXPECT_THROW(c.append(Gate::single(GateKind::H, 2)), ValidationError);
  EXPECT_THROW(c.append(Gate::cnot(1, 1)), ValidationError);
  EXPECT_THROW(c.append(Gate::cnot(0, 5)), ValidationError);
  EXPECT_THROW(ParameterizedCircuit(0), ValidationError);
  EXPECT_THROW(c.append(ParameterizedCircuit(3)), ValidationError);
  EXPECT_NO_THROW(c.append(Gate::cnot(1, 0)));
}

TEST(Circuit, ValidateRequiresEveryParameterUsed) {
  ParameterizedCircuit c(1);
  // Appending a symbolic gate grows the parameter vector to cover its index.
  c.append(Gate::rotation(GateKind::RZ, 0, SymbolicAngle{2, 2.0}));
  EXPECT_EQ(c.n_parameters(), 3u);
  EXPECT_THROW(c.validate(), ValidationError);
  c.append(Gate::rotation(GateKind::RX, 0, SymbolicAngle{0, 1.0}));
  c.append(Gate::rotation(GateKind::RY, 0, SymbolicAngle{1, 1.0}));
  EXPECT_NO_THROW(c.validate());
}

TEST(Circuit, TextRoundTrip) {
  auto c = random_symbolic_circuit(4, 40, 7);
  c.append(Gate::rotation(GateKind::RY, 2, SymbolicAngle{0, -0.5}));
  c.append(Gate::rotation(GateKind::RX, 3, 0.123456789012345678));
  const auto text = c.to_text();
  const auto back = ParameterizedCircuit::from_text(text);
  EXPECT_EQ(back, c);
  EXPECT_EQ(back.to_text(), text);
  const auto he = vqesim::build_he(vqesim::HeVariant::v3, 4, 2);
  EXPECT_EQ(ParameterizedCircuit::from_text(he.to_text()), he);
}

TEST(Circuit, TextParserRejectsMalformedInput) {
  EXPECT_THROW(ParameterizedCircuit::from_text(""), ValidationError);
  EXPECT_THROW(ParameterizedCircuit::from_text("H 0\n"), ValidationError);
  EXPECT_THROW(ParameterizedCircuit::from_text("# n_qubits=2 n_parameters=0 family=custom depth=0\nFOO 0\n"),
               ValidationError);
  EXPECT_THROW(ParameterizedCircuit::from_text("# n_qubits=2 n_parameters=0 family=custom depth=0\nCNOT 0\n"),
               ValidationError);
  EXPECT_THROW(ParameterizedCircuit::from_text("# n_qubits=2 n_parameters=0 family=custom depth=0\nRX 0 abc\n"),
               ValidationError);
}

TEST(Bind, ZeroVectorOnV2LeavesHadamardsAndCnots) {
  const auto c = vqesim::build_he(vqesim::HeVariant::v2, 4, 1);
  const auto b = vqesim::bind(c, std::vector<double>(c.n_parameters(), 0.0));
  ASSERT_TRUE(b.is_bound());
  for (const auto& g : b.gates())
    if (vqesim::is_rotation(g.kind)) EXPECT_EQ(g.angle(), 0.0);
  // Zero rotations are identities, so the unitary is the H layer + CNOT chain.
  ParameterizedCircuit expected(4);
  for (std::size_t q = 0; q < 4; ++q) expected.append(Gate::single(GateKind::H, q));
  for (std::size_t q = 0; q + 1 < 4; ++q) expected.append(Gate::cnot(q, q + 1));
  EXPECT_LT((oracle::circuit_unitary(b) - oracle::circuit_unitary(expected)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Bind, IdempotentAndPreservesGateCount) {
  const auto c = random_symbolic_circuit(3, 30, 11);
  std::vector<double> theta(c.n_parameters());
  for (std::size_t i = 0; i < theta.size(); ++i) theta[i] = 0.1 * static_cast<double>(i) - 0.4;
  const auto once = vqesim::bind(c, theta);
  EXPECT_EQ(vqesim::bind(once, theta), once);
  EXPECT_EQ(once.size(), c.size());
  EXPECT_FALSE(c.is_bound());
  EXPECT_TRUE(once.is_bound());
}

TEST(Bind, AppliesScale) {
  ParameterizedCircuit c(1);
  c.append(Gate::rotation(GateKind::RZ, 0, SymbolicAngle{c.new_parameter(), -2.5}));
  const auto b = vqesim::bind(c, std::vector<double>{0.4});
  EXPECT_DOUBLE_EQ(b.gates()[0].angle(), -1.0);
}

TEST(Bind, LengthMismatchThrows) {
  const auto c = vqesim::build_he(vqesim::HeVariant::v1, 4, 1);
  EXPECT_THROW(vqesim::bind(c, std::vector<double>(c.n_parameters() + 1, 0.0)), ValidationError);
  EXPECT_THROW(vqesim::bind(c, std::vector<double>{}), ValidationError);
}

TEST(Inverse, ComposesToIdentity) {
  const auto c = random_symbolic_circuit(4, 50, 3);
  std::vector<double> theta(c.n_parameters(), 0.77);
  const auto b = vqesim::bind(c, theta);
  const oracle::Mat u = oracle::circuit_unitary(b) * oracle::circuit_unitary(vqesim::inverse(b));
  EXPECT_LT((u - oracle::identity(16)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(vqesim::inverse(c), ValidationError);
}

TEST(GateIdentities, HadamardIsRyTimesRxUpToPhase) {
  const oracle::Mat h = oracle::gate_2x2(GateKind::H, 0);
  const auto ry = vqesim::gate_matrix(GateKind::RY, -kPi / 2);
  const auto rx = vqesim::gate_matrix(GateKind::RX, kPi);
  oracle::Mat a(2, 2), b(2, 2);
  for (int i = 0; i < 4; ++i) {
    a(i / 2, i % 2) = ry[i];
    b(i / 2, i % 2) = rx[i];
  }
  EXPECT_NEAR(phase_free_overlap(a * b, h), 1.0, 1e-14);
}

}  // namespace
