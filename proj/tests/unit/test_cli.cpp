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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const fs::path& p) { return json::parse(read(p)); }

std::string fmt_point(int k) { return "point_00" + std::to_string(k) + ".json"; }

/// JSON text with the wall-clock timestamp removed.
std::string without_timestamp(const fs::path& p) {
  auto j = read_json(p);
  if (j.contains("metadata")) j["metadata"].erase("generated_at");
  return j.dump();
}

std::vector<std::string> csv_lines(const fs::path& p) {
  std::istringstream in(read(p));
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  return lines;
}

std::vector<double> csv_row(const std::string& line) {
  std::vector<double> v;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) v.push_back(std::stod(cell));
  return v;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("vqesim_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return vqesim::cli::run_cli(args, out_, err_);
  }

  static std::string data(const std::string& name) { return (oracle::data_dir() / name).string(); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, GeometryWritesDeterministicFiles) {
  const auto a = dir_ / "a", b = dir_ / "b";
  ASSERT_EQ(run({"geometry", "--distortion", "1", "--params", "1.41", "--out", a.string()}), 0);
  ASSERT_EQ(run({"geometry", "--distortion", "1", "--params", "1.41", "--out", b.string()}), 0);
  const auto file = a / "benzene_d1_1.41.xyz";
  ASSERT_TRUE(fs::exists(file));
  EXPECT_EQ(read(file), read(b / "benzene_d1_1.41.xyz"));
  EXPECT_EQ(read(file).substr(0, 3), "12\n");
  ASSERT_EQ(run({"geometry", "--distortion", "3", "--params", "0.0,0.5", "--out", a.string()}), 0);
  EXPECT_TRUE(fs::exists(a / "benzene_d3_0.xyz"));
  EXPECT_TRUE(fs::exists(a / "benzene_d3_0.5.xyz"));
}

TEST_F(Cli, GeometryRejectsBadParameters) {
  EXPECT_EQ(run({"geometry", "--distortion", "1", "--params", "-1", "--out", dir_.string()}), 1);
  EXPECT_EQ(run({"geometry", "--distortion", "7", "--params", "1", "--out", dir_.string()}), 1);
}

TEST_F(Cli, ExactMatchesReferenceEnergy) {
  ASSERT_EQ(run({"exact", "--fcidump", data("h2_sto3g.fcidump"), "--out", dir_.string()}), 0) << err_.str();
  const auto j = read_json(dir_ / "exact.json");
  EXPECT_NEAR(j["ground_energy"].get<double>(), -1.137270174660903, 1e-9);
  EXPECT_NEAR(j["hf_energy"].get<double>(), -1.1166843870853405, 1e-9);
  EXPECT_EQ(j["n_qubits"], 4);
  const auto noons = j["noons"].get<std::vector<double>>();
  ASSERT_EQ(noons.size(), 2u);
  EXPECT_NEAR(noons[0] + noons[1], 2.0, 1e-8);
  for (const char* key : {"version", "spec_hash", "generated_at"}) {
    EXPECT_TRUE(j["metadata"].contains(key)) << key;
  }
  const auto csv = csv_lines(dir_ / "noons.csv");
  ASSERT_EQ(csv.size(), 2u);
  EXPECT_EQ(csv[0], "distortion_parameter,noon_1,noon_2");
}

TEST_F(Cli, ExactOverFcidumpList) {
  ASSERT_EQ(run({"exact", "--fcidump-list", data("h2_sto3g.fcidump") + "," + data("h4_chain_sto3g.fcidump"),
                 "--params", "0.7,1.5", "--out", dir_.string()}),
            0)
      << err_.str();
  const auto j = read_json(dir_ / "exact.json");
  ASSERT_EQ(j["points"].size(), 2u);
  EXPECT_NEAR(j["points"][1]["ground_energy"].get<double>(), -2.1663874486347625, 1e-9);
  const auto csv = csv_lines(dir_ / "noons.csv");
  ASSERT_EQ(csv.size(), 3u);
  EXPECT_EQ(csv[2].substr(0, 4), "1.5,");
}

TEST_F(Cli, FreezingThatEmptiesActiveSpaceIsValidationError) {
  EXPECT_EQ(run({"exact", "--fcidump", data("h2_sto3g.fcidump"), "--eps1", "0.001", "--eps2", "1.99", "--out",
                 dir_.string()}),
            1);
  EXPECT_NE(err_.str().find("empty"), std::string::npos) << err_.str();
}

TEST_F(Cli, ValidationFailures) {
  EXPECT_EQ(run({}), 1);
  EXPECT_EQ(run({"frobnicate"}), 1);
  EXPECT_EQ(run({"exact", "--fcidump", (dir_ / "missing.fcidump").string(), "--out", dir_.string()}), 1);
  EXPECT_EQ(run({"vqe", "--fcidump", data("h2_sto3g.fcidump"), "--ansatz", "xyz", "--out", dir_.string()}), 1);
  EXPECT_EQ(run({"vqe", "--fcidump", data("h2_sto3g.fcidump"), "--trials", "0", "--out", dir_.string()}), 1);
  EXPECT_EQ(run({"vqe", "--fcidump", data("h2_sto3g.fcidump"), "--init", "explicit", "--theta", "0.1", "--out",
                 dir_.string()}),
            1);
}

TEST_F(Cli, VersionFlag) {
  EXPECT_EQ(run({"--version"}), 0);
  EXPECT_NE(out_.str().find("0.3.0"), std::string::npos);
}

TEST_F(Cli, VqeCampaignOutputsAndDeterminism) {
  const std::vector<std::string> base = {"vqe", "--fcidump", data("h2_sto3g.fcidump"), "--trials", "3",
                                         "--init", "random", "--max-evals", "150", "--seed", "11"};
  auto with_out = [&](const fs::path& p) {
    auto a = base;
    a.insert(a.end(), {"--out", p.string()});
    return a;
  };
  ASSERT_EQ(run(with_out(dir_ / "a")), 0) << err_.str();
  ASSERT_EQ(run(with_out(dir_ / "b")), 0) << err_.str();
  for (const char* f : {"point_000.json", "campaign.json"}) {
    EXPECT_EQ(without_timestamp(dir_ / "a" / f), without_timestamp(dir_ / "b" / f)) << f;
  }
  EXPECT_EQ(read(dir_ / "a" / "summary.csv"), read(dir_ / "b" / "summary.csv"));
  const auto lines = csv_lines(dir_ / "a" / "summary.csv");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0] + "\n", vqesim::cli::campaign_csv_header());
  const auto row = csv_row(lines[1]);
  ASSERT_EQ(row.size(), 10u);
  // min <= q1 <= median <= q3 <= max, and min respects the variational bound.
  EXPECT_LE(row[2], row[3]);
  EXPECT_LE(row[3], row[4]);
  EXPECT_LE(row[4], row[5]);
  EXPECT_LE(row[5], row[6]);
  EXPECT_GE(row[2], row[7] - 1e-9);
  const auto point = read_json(dir_ / "a" / "point_000.json");
  EXPECT_EQ(point["ensemble"]["trials"].size(), 3u);
  EXPECT_EQ(point["metadata"]["base_seed"], 11);
  // The provenance hash ignores the output directory.
  EXPECT_EQ(read_json(dir_ / "a" / "campaign.json")["metadata"]["spec_hash"],
            read_json(dir_ / "b" / "campaign.json")["metadata"]["spec_hash"]);
}

TEST_F(Cli, HardwareEfficientEightQubitMinimumRespectsReference) {
  ASSERT_EQ(run({"vqe", "--fcidump", data("h4_chain_sto3g.fcidump"), "--ansatz", "he", "--variant", "v3",
                 "--depth", "1", "--trials", "4", "--max-evals", "150", "--out", dir_.string()}),
            0)
      << err_.str();
  const auto row = csv_row(csv_lines(dir_ / "summary.csv")[1]);
  EXPECT_GE(row[2], row[7] - 1e-9);
  EXPECT_NEAR(row[7], -2.1663874486347625, 1e-9);
}

TEST_F(Cli, SweepT1WritesOneRowPerValue) {
  ASSERT_EQ(run({"sweep-t1", "--fcidump", data("h2_sto3g.fcidump"), "--t1-list", "80,200,1000", "--trials", "2",
                 "--max-evals", "40", "--init", "mp2", "--out", dir_.string()}),
            0)
      << err_.str();
  const auto lines = csv_lines(dir_ / "summary.csv");
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(csv_row(lines[1])[0], 80.0);
  EXPECT_EQ(csv_row(lines[3])[0], 1000.0);
  for (int k = 0; k < 3; ++k) EXPECT_TRUE(fs::exists(dir_ / fmt_point(k)));
  const auto p = read_json(dir_ / "point_000.json");
  EXPECT_EQ(p["noise"]["t1_us"], 80.0);
  EXPECT_EQ(p["noise"]["t2_us"], 80.0);
}

TEST_F(Cli, SweepShotsDeterministic) {
  const std::vector<std::string> base = {"sweep-shots", "--fcidump", data("h2_sto3g.fcidump"), "--shots-list",
                                         "256,1024", "--trials", "2", "--max-evals", "40", "--init", "mp2"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out", (dir_ / "a").string()});
  b.insert(b.end(), {"--out", (dir_ / "b").string(), "--jobs", "2"});
  ASSERT_EQ(run(a), 0) << err_.str();
  ASSERT_EQ(run(b), 0) << err_.str();
  EXPECT_EQ(read(dir_ / "a" / "summary.csv"), read(dir_ / "b" / "summary.csv"));
  EXPECT_EQ(without_timestamp(dir_ / "a" / "point_001.json"), without_timestamp(dir_ / "b" / "point_001.json"));
  EXPECT_EQ(csv_lines(dir_ / "a" / "summary.csv").size(), 3u);
}

TEST_F(Cli, OutputDirectoryFromEnvironment) {
  const auto target = dir_ / "env";
  ::setenv(vqesim::cli::kOutDirEnv, target.string().c_str(), 1);
  const int code = run({"geometry", "--distortion", "2", "--params", "2.5"});
  ::unsetenv(vqesim::cli::kOutDirEnv);
  ASSERT_EQ(code, 0) << err_.str();
  EXPECT_TRUE(fs::exists(target / "benzene_d2_2.5.xyz"));
  EXPECT_EQ(run({"geometry", "--distortion", "2", "--params", "2.5"}), 1);
}

}  // namespace
