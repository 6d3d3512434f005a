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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "vqesim/error.hpp"
#include "vqesim/exact.hpp"
#include "vqesim/fermion.hpp"
#include "vqesim/integrals.hpp"

namespace {

using vqesim::ActiveSpace;
using vqesim::MolecularIntegrals;
using vqesim::ValidationError;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MolecularIntegrals h2() {
  auto m = vqesim::load_fcidump((oracle::data_dir() / "h2_sto3g.fcidump").string());
  vqesim::apply_sidecar(m, vqesim::load_sidecar((oracle::data_dir() / "h2_sto3g.json").string()));
  return m;
}

TEST(ParseFcidump, SingleOneBodyRecord) {
  const auto m = vqesim::parse_fcidump("&FCI NORB=1,NELEC=2,MS2=0,\n&END\n-1.25 1 1 0 0\n");
  EXPECT_EQ(m.n_orbitals, 1u);
  EXPECT_EQ(m.one(0, 0), -1.25);
  EXPECT_TRUE(std::all_of(m.h_two.begin(), m.h_two.end(), [](double v) { return v == 0.0; }));
  EXPECT_EQ(m.e_core, 0.0);
}

TEST(ParseFcidump, CoreEnergyOnly) {
  const auto m = vqesim::parse_fcidump("&FCI NORB=2,NELEC=2,MS2=0\n/\n0.7137 0 0 0 0\n");
  EXPECT_EQ(m.e_core, 0.7137);
  EXPECT_TRUE(std::all_of(m.h_one.begin(), m.h_one.end(), [](double v) { return v == 0.0; }));
  EXPECT_TRUE(std::all_of(m.h_two.begin(), m.h_two.end(), [](double v) { return v == 0.0; }));
}

TEST(ParseFcidump, TwoBodyRecordFillsEightFoldOrbit) {
  const auto m = vqesim::parse_fcidump("&FCI NORB=2,NELEC=2,\n&END\n0.25 2 1 2 2\n");
  for (auto [p, q, r, s] : {std::array<std::size_t, 4>{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 0},
                            {1, 1, 0, 1}}) {
    EXPECT_EQ(m.chemist(p, q, r, s), 0.25);
  }
  EXPECT_EQ(m.chemist(0, 0, 1, 1), 0.0);
}

TEST(ParseFcidump, OrbitalEnergyRecords) {
  const auto m =
      vqesim::parse_fcidump("&FCI NORB=2,NELEC=2,\n&END\n-0.5 1 0 0 0\n0.6 2 0 0 0\n");
  ASSERT_TRUE(m.orbital_energies.has_value());
  EXPECT_EQ((*m.orbital_energies)[0], -0.5);
  EXPECT_EQ((*m.orbital_energies)[1], 0.6);
}

TEST(ParseFcidump, MalformedHeaderIsRejected) {
  EXPECT_THROW(vqesim::parse_fcidump("NORB=2\n-1 1 1 0 0\n"), ValidationError);
  EXPECT_THROW(vqesim::parse_fcidump("&FCI NELEC=2\n&END\n"), ValidationError);
  EXPECT_THROW(vqesim::parse_fcidump("&FCI NORB=2,NELEC=2\n-1 1 1 0 0\n"), ValidationError);
}

TEST(ParseFcidump, IndexOutOfRangeIsRejected) {
  EXPECT_THROW(vqesim::parse_fcidump("&FCI NORB=2,NELEC=2\n&END\n0.1 3 1 0 0\n"),
               ValidationError);
}

TEST(ParseFcidump, ConflictingDuplicatesAreRejected) {
  EXPECT_THROW(vqesim::parse_fcidump("&FCI NORB=2,NELEC=2\n&END\n0.1 2 1 0 0\n0.2 1 2 0 0\n"),
               ValidationError);
  EXPECT_THROW(vqesim::parse_fcidump("&FCI NORB=2,NELEC=2\n&END\n0.1 1 1 2 2\n0.3 2 2 1 1\n"),
               ValidationError);
}

TEST(ParseFcidump, ConsistentDuplicatesAreAccepted) {
  const auto m =
      vqesim::parse_fcidump("&FCI NORB=2,NELEC=2\n&END\n0.1 1 1 2 2\n0.1 2 2 1 1\n");
  EXPECT_EQ(m.chemist(0, 0, 1, 1), 0.1);
}

TEST(ParseFcidump, MalformedRecordIsRejected) {
  EXPECT_THROW(vqesim::parse_fcidump("&FCI NORB=1,NELEC=2\n&END\n0.1 1 1\n"), ValidationError);
  EXPECT_THROW(vqesim::parse_fcidump("&FCI NORB=1,NELEC=2\n&END\nabc 1 1 0 0\n"),
               ValidationError);
}

TEST(ParseFcidump, H2FixtureRoundTripsBitIdentically) {
  const auto m = vqesim::load_fcidump((oracle::data_dir() / "h2_sto3g.fcidump").string());
  const std::string text = vqesim::write_fcidump(m);
  const auto back = vqesim::parse_fcidump(text);
  EXPECT_EQ(back.n_orbitals, m.n_orbitals);
  EXPECT_EQ(back.n_electrons, m.n_electrons);
  EXPECT_EQ(back.e_core, m.e_core);
  EXPECT_EQ(back.h_one, m.h_one);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s) {
          EXPECT_EQ(back.chemist(p, q, r, s), m.chemist(p, q, r, s));
        }
  EXPECT_EQ(back.orbital_energies, m.orbital_energies);
  EXPECT_EQ(vqesim::write_fcidump(back), text);
}

TEST(ParseFcidump, FixturesSatisfyInvariants) {
  for (const char* name : {"h2_sto3g", "h4_chain_sto3g", "lih_sto3g"}) {
    auto m = vqesim::load_fcidump((oracle::data_dir() / (std::string(name) + ".fcidump")).string());
    vqesim::apply_sidecar(
        m, vqesim::load_sidecar((oracle::data_dir() / (std::string(name) + ".json")).string()));
    EXPECT_NO_THROW(m.validate()) << name;
  }
}

TEST(Integrals, ValidateRejectsBrokenSymmetry) {
  auto m = MolecularIntegrals::zeros(2, 2);
  m.one(0, 1) = 0.1;
  EXPECT_THROW(m.validate(), ValidationError);
  m.one(1, 0) = 0.1;
  EXPECT_NO_THROW(m.validate());
  m.two(0, 0, 1, 1) = 0.2;
  EXPECT_THROW(m.validate(), ValidationError);
}

TEST(Integrals, ValidateRejectsBadNoons) {
  auto m = MolecularIntegrals::zeros(2, 2);
  m.noons = std::vector<double>{1.5, 0.2};
  EXPECT_THROW(m.validate(), ValidationError);
  m.noons = std::vector<double>{1.8, 0.2};
  EXPECT_NO_THROW(m.validate());
}

TEST(Integrals, PhysicistIndexOrder) {
  const auto m = oracle::random_integrals(3, 2, 5);
  const auto phys = m.with_convention(vqesim::TwoBodyConvention::physicists);
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = 0; q < 3; ++q)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < 3; ++s) {
          EXPECT_EQ(m.physicist(p, q, r, s), m.chemist(p, s, q, r));
          EXPECT_EQ(phys.physicist(p, q, r, s), m.physicist(p, q, r, s));
          EXPECT_EQ(phys.chemist(p, q, r, s), m.chemist(p, q, r, s));
        }
}

TEST(Sidecar, ParsesKeys) {
  const auto s = vqesim::parse_sidecar_json(R"({"noons": [2, 0], "orbital_energies": [-1, 1]})");
  ASSERT_TRUE(s.noons && s.orbital_energies);
  EXPECT_EQ((*s.noons)[0], 2.0);
  EXPECT_THROW(vqesim::parse_sidecar_json("[1,2]"), ValidationError);
  EXPECT_THROW(vqesim::parse_sidecar_json("{"), ValidationError);
}

MolecularIntegrals with_noons(std::vector<double> noons, std::size_t n_elec) {
  auto m = MolecularIntegrals::zeros(noons.size(), n_elec);
  m.noons = std::move(noons);
  return m;
}

TEST(SelectActiveSpace, AllOrbitalsInWindowAreActive) {
  const auto a = vqesim::select_active_space(with_noons({1.9, 1.2, 0.8, 0.1}, 4), 0.05, 0.05);
  EXPECT_EQ(a.active, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_TRUE(a.occupied_frozen.empty());
  EXPECT_EQ(a.n_active_electrons, 4u);
}

TEST(SelectActiveSpace, HandExampleWithZeroBasedFermiClause) {
  // noons (2, 2, 1, 1, 0), N = 6, eps1 = eps2 = 0.01. With 0-based orbital
  // indices the clause 2(i+1) < N holds for i = 0 and i = 1, so both fully
  // occupied orbitals are frozen; orbitals 2 and 3 fall in the window and
  // orbital 4 is a discarded virtual.
  const auto a = vqesim::select_active_space(with_noons({2.0, 2.0, 1.0, 1.0, 0.0}, 6), 0.01, 0.01);
  EXPECT_EQ(a.occupied_frozen, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(a.active, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(a.n_active_electrons, 2u);
  EXPECT_EQ(a.virtual_orbitals(5), (std::vector<std::size_t>{4}));
}

TEST(SelectActiveSpace, HighLowerThresholdKeepsOnlyHighOccupancyTail) {
  // eps2 above every partially occupied number: only the second clause
  // (n_i >= 2 - eps1 at or above the Fermi level) can add orbitals.
  const auto a = vqesim::select_active_space(with_noons({2.0, 2.0, 0.05, 0.03}, 4), 0.01, 0.5);
  EXPECT_EQ(a.occupied_frozen, (std::vector<std::size_t>{0}));
  EXPECT_EQ(a.active, (std::vector<std::size_t>{1}));
  EXPECT_EQ(a.n_active_electrons, 2u);
}

TEST(SelectActiveSpace, ErrorsOnMissingNoonsBadThresholdsOrEmptySet) {
  EXPECT_THROW(vqesim::select_active_space(MolecularIntegrals::zeros(2, 2), 0.01, 0.01),
               ValidationError);
  EXPECT_THROW(vqesim::select_active_space(with_noons({1.0, 1.0}, 2), 0.01, 2.5), ValidationError);
  EXPECT_THROW(vqesim::select_active_space(with_noons({1.0, 1.0}, 2), 0.01, 0.0), ValidationError);
  // Every occupation is below eps2 and none reaches 2 - eps1: empty set.
  EXPECT_THROW(vqesim::select_active_space(with_noons({1.9, 0.0}, 2), 0.01, 1.95),
               ValidationError);
}

TEST(SelectActiveSpace, PartitionProperty) {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
    std::vector<double> noons(n);
    for (auto& v : noons) v = 2.0 * u(gen);
    std::sort(noons.rbegin(), noons.rend());
    const double total = std::accumulate(noons.begin(), noons.end(), 0.0);
    const auto n_elec = static_cast<std::size_t>(std::lround(total));
    for (auto& v : noons) v *= static_cast<double>(n_elec) / total;
    if (n_elec == 0 || noons[0] > 2.0) continue;
    const double eps1 = 0.3 * u(gen), eps2 = 0.01 + 0.3 * u(gen);
    ActiveSpace a;
    try {
      a = vqesim::select_active_space(with_noons(noons, n_elec), eps1, eps2);
    } catch (const ValidationError&) {
      continue;  // empty active space or too many frozen electrons
    }
    std::vector<int> hits(n, 0);
    for (auto i : a.active) ++hits[i];
    for (auto i : a.occupied_frozen) ++hits[i];
    for (auto i : a.virtual_orbitals(n)) ++hits[i];
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(hits[i], 1) << "orbital " << i;
  }
}

TEST(FreezeOrbitals, EmptyFrozenSetKeepsIntegrals) {
  const auto m = oracle::random_integrals(3, 2, 7);
  const auto a = vqesim::make_active_space(m, {0, 2}, {});
  const auto f = vqesim::freeze_orbitals(m, a);
  EXPECT_EQ(f.e_core, m.e_core);
  EXPECT_EQ(f.n_orbitals, 2u);
  EXPECT_EQ(f.one(0, 1), m.one(0, 2));
  EXPECT_EQ(f.one(1, 1), m.one(2, 2));
  EXPECT_EQ(f.chemist(0, 1, 1, 0), m.chemist(0, 2, 2, 0));
  EXPECT_EQ(f.chemist(1, 1, 1, 1), m.chemist(2, 2, 2, 2));
}

TEST(FreezeOrbitals, ZeroTwoBodyCoreEnergyGainsDoubledDiagonal) {
  auto m = MolecularIntegrals::zeros(3, 4);
  m.e_core = 0.5;
  m.one(0, 0) = -2.0;
  m.one(1, 1) = -1.0;
  m.one(2, 2) = 0.5;
  const auto f = vqesim::freeze_orbitals(m, vqesim::make_active_space(m, {2}, {0, 1}));
  // Two electrons per frozen orbital, each contributing h_ii.
  EXPECT_DOUBLE_EQ(f.e_core, 0.5 + 2.0 * (-2.0) + 2.0 * (-1.0));
  EXPECT_EQ(f.n_electrons, 0u);
}

TEST(FreezeOrbitals, ThreeOrbitalOracle) {
  // Frozen-core energy equals the lowest eigenvalue of the full Fock-space
  // Hamiltonian restricted to determinants with orbital 0 doubly occupied.
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const auto m = oracle::random_integrals(3, 4, seed);
    const auto a = vqesim::make_active_space(m, {1, 2}, {0});
    const auto f = vqesim::freeze_orbitals(m, a);
    ASSERT_EQ(f.n_electrons, 2u);
    const auto h = vqesim::qubit_hamiltonian(f);
    const double frozen = vqesim::ground_state(h, 2, f.e_core).ground_energy;
    const oracle::Mat full = oracle::fock_hamiltonian(m);
    const double restricted =
        oracle::lowest_in_subspace(full, oracle::sector_indices(6, 4, 0b11));
    EXPECT_NEAR(frozen, restricted, 1e-10) << "seed " << seed;
  }
}

TEST(FreezeOrbitals, FourOrbitalOracleWithTwoFrozen) {
  const auto m = oracle::random_integrals(4, 6, 9);
  const auto f = vqesim::freeze_orbitals(m, vqesim::make_active_space(m, {2, 3}, {0, 1}));
  const double frozen =
      vqesim::ground_state(vqesim::qubit_hamiltonian(f), 2, f.e_core).ground_energy;
  const double restricted = oracle::lowest_in_subspace(oracle::fock_hamiltonian(m),
                                                       oracle::sector_indices(8, 6, 0b1111));
  EXPECT_NEAR(frozen, restricted, 1e-10);
}

TEST(ActiveSpace, RejectsOverlapAndTooManyFrozenElectrons) {
  const auto m = MolecularIntegrals::zeros(3, 2);
  EXPECT_THROW(vqesim::make_active_space(m, {0, 1}, {1}), ValidationError);
  EXPECT_THROW(vqesim::make_active_space(m, {2}, {0, 1}), ValidationError);
  EXPECT_THROW(vqesim::make_active_space(m, {3}, {}), ValidationError);
}

TEST(Fixture, H2SidecarMatchesEnergies) {
  const auto m = h2();
  const auto j = nlohmann::json::parse(slurp(oracle::data_dir() / "h2_sto3g.json"));
  const double fci = j["fci_energy"];
  const double e = vqesim::ground_state(vqesim::qubit_hamiltonian(m), 2, m.e_core).ground_energy;
  EXPECT_NEAR(e, fci, 1e-10);
}

}  // namespace
