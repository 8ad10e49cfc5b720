// Copyright 2026 The permcode Authors
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


#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "permcode/cli.h"

namespace permcode {
namespace {

using Json = nlohmann::ordered_json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "permcode");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json InvokeJson(const std::vector<std::string>& args) {
  const CliRun r = Invoke(args);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return Json::parse(r.out);
}

// Fields that depend on the machine or the clock. Only their presence is
// compared.
const std::set<std::string>& VolatileKeys() {
  static const std::set<std::string> keys = {
      "wall_time_s",          "versions",           "seconds",
      "setup_seconds",        "solve_seconds",      "iterations",
      "relative_gap",         "primal_infeasibility", "dual_infeasibility",
      "min_eigenvalues",      "dual_objective",     "message",
      "smallest_accepted",    "largest_rejected"};
  return keys;
}

void ExpectMatches(const Json& want, const Json& got, const std::string& path) {
  if (want.is_number_float() || got.is_number_float()) {
    ASSERT_TRUE(got.is_number()) << path;
    const double w = want.get<double>(), g = got.get<double>();
    EXPECT_NEAR(w, g, 1e-6 * std::max(1.0, std::abs(w))) << path;
    return;
  }
  ASSERT_EQ(want.type(), got.type()) << path;
  if (want.is_object()) {
    std::vector<std::string> wk, gk;
    for (const auto& [k, v] : want.items()) wk.push_back(k);
    for (const auto& [k, v] : got.items()) gk.push_back(k);
    ASSERT_EQ(wk, gk) << path;
    for (const auto& k : wk) {
      if (VolatileKeys().count(k)) continue;
      ExpectMatches(want[k], got[k], path + "." + k);
    }
  } else if (want.is_array()) {
    ASSERT_EQ(want.size(), got.size()) << path;
    for (size_t i = 0; i < want.size(); ++i) {
      ExpectMatches(want[i], got[i], path + "[" + std::to_string(i) + "]");
    }
  } else {
    EXPECT_EQ(want, got) << path;
  }
}

// Set PERMCODE_UPDATE_GOLDEN=1 to rewrite the files.
void CheckGolden(const std::string& name, const std::vector<std::string>& args) {
  const Json got = InvokeJson(args);
  const std::filesystem::path file =
      std::filesystem::path(PERMCODE_GOLDEN_DIR) / (name + ".json");
  if (std::getenv("PERMCODE_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(file) << got.dump(2) << '\n';
  }
  std::ifstream in(file);
  ASSERT_TRUE(in) << "missing golden file " << file;
  ExpectMatches(Json::parse(in), got, name);
}

TEST(CliGoldenTest, Chars) { CheckGolden("chars_n4", {"--json", "chars", "--n", "4"}); }

TEST(CliGoldenTest, Scheme) {
  CheckGolden("scheme_n3", {"--json", "scheme", "--n", "3", "--tensor"});
}

TEST(CliGoldenTest, Lp) {
  CheckGolden("lp_n6_d56", {"--json", "lp", "--n", "6", "--dset", "5,6"});
}

TEST(CliGoldenTest, Orbits) {
  CheckGolden("orbits_n5", {"--json", "orbits", "--n", "5", "--enumerate",
                            "--swap"});
}

TEST(CliGoldenTest, Algebra) {
  CheckGolden("algebra_n4", {"--json", "algebra", "--n", "4",
                             "--multiplicities", "--terwilliger-dim"});
}

TEST(CliGoldenTest, Blocks) {
  CheckGolden("blocks_n5", {"--json", "blocks", "--n", "5"});
}

TEST(CliGoldenTest, Sdp) {
  CheckGolden("sdp_n5_d45", {"--json", "sdp", "--n", "5", "--dset", "4,5"});
}

TEST(CliGoldenTest, Tables) {
  CheckGolden("tables_1", {"--json", "tables", "--which", "1", "--rows",
                           "1..3"});
}

TEST(CliTest, ReportSchema) {
  const Json r = InvokeJson({"--json", "lp", "--n", "6", "--dset", "5,6"});
  EXPECT_EQ(r["schema"], kReportSchema);
  EXPECT_EQ(r["floored_bound"], 30);
  EXPECT_EQ(r["raw"], "30");
  EXPECT_EQ(r["product_bound"], 30);
  EXPECT_EQ(r["bound_kind"], "lp");
  EXPECT_EQ(r["versions"]["permcode"], kVersion);
  EXPECT_TRUE(r["wall_time_s"].is_number());
  EXPECT_EQ(r["command"].size(), 7u);
}

TEST(CliTest, OrbitCountsAtEightUseOnlyTheFormula) {
  const Json r = InvokeJson({"--json", "orbits", "--n", "8"});
  EXPECT_EQ(r["result"]["b"], 27190);
  EXPECT_EQ(r["result"]["b_swap"], 14016);
  EXPECT_FALSE(r["result"].contains("enumeration"));
}

TEST(CliTest, EmptyDistanceSet) {
  const Json r = InvokeJson({"--json", "lp", "--n", "5", "--dset", ""});
  EXPECT_EQ(r["floored_bound"], 1);
  EXPECT_EQ(r["distances"].size(), 0u);
}

TEST(CliTest, DminMatchesDset) {
  const Json a = InvokeJson({"--json", "sdp", "--n", "5", "--dmin", "4"});
  const Json b = InvokeJson({"--json", "sdp", "--n", "5", "--dset", "{4,5}"});
  EXPECT_EQ(a["distances"], b["distances"]);
  EXPECT_EQ(a["floored_bound"], 20);
  EXPECT_EQ(b["floored_bound"], 20);
}

TEST(CliTest, FullAndBlockModesAgree) {
  const Json a = InvokeJson(
      {"--json", "sdp", "--n", "5", "--dset", "3,5", "--mode", "full"});
  const Json b = InvokeJson(
      {"--json", "sdp", "--n", "5", "--dset", "3,5", "--mode", "block"});
  EXPECT_NEAR(a["raw"].get<double>(), b["raw"].get<double>(), 1e-6);
}

TEST(CliTest, DeterministicUnderSeed) {
  const std::vector<std::string> args = {"--json", "--seed", "17", "blocks",
                                         "--n", "5"};
  Json a = InvokeJson(args), b = InvokeJson(args);
  a.erase("wall_time_s");
  b.erase("wall_time_s");
  a["result"].erase("seconds");
  b["result"].erase("seconds");
  EXPECT_EQ(a, b);
}

TEST(CliTest, UsageErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"lp", "--n", "6"},
           {"lp", "--n", "6", "--dmin", "5", "--dset", "5,6"},
           {"lp", "--n", "6", "--dset", "5,x"},
           {"lp", "--n", "6", "--dset", "7"},
           {"lp", "--n", "6", "--dmin", "1"},
           {"sdp", "--n", "5", "--dmin", "3", "--mode", "sparse"},
           {"tables", "--which", "5"},
           {"tables", "--which", "1", "--rows", "9..10"},
           {"chars"},
       }) {
    const CliRun r = Invoke(args);
    EXPECT_EQ(r.code, kExitUsage) << r.err;
    EXPECT_FALSE(r.err.empty());
  }
  EXPECT_NE(Invoke({"frobnicate"}).err.find("Usage"), std::string::npos);
}

TEST(CliTest, CapacityErrorsExitThree) {
  EXPECT_EQ(Invoke({"orbits", "--n", "8", "--enumerate"}).code, kExitCapacity);
  EXPECT_EQ(Invoke({"sdp", "--n", "8", "--dmin", "5"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"sdp", "--n", "6", "--dmin", "5", "--mode", "full"}).code,
            kExitCapacity);
  EXPECT_EQ(Invoke({"algebra", "--n", "6", "--terwilliger-dim"}).code,
            kExitCapacity);
}

TEST(CliTest, SolverFailureExitsFour) {
  const CliRun r = Invoke({"sdp", "--n", "5", "--dmin", "3",
                           "--max-iterations", "2"});
  EXPECT_EQ(r.code, kExitSolverFailure);
  EXPECT_NE(r.err.find("did not converge"), std::string::npos);
}

TEST(CliTest, ExportedProblemIsReadable) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "permcode_cli_n5.dat-s")
          .string();
  EXPECT_EQ(Invoke({"sdp", "--n", "5", "--dmin", "4", "--export-sdpa", path})
                .code,
            kExitOk);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first.rfind("* permcode SDP", 0), 0u);
  std::filesystem::remove(path);
}

TEST(CliTest, TablesWriteCsv) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "permcode_cli_table3.csv")
          .string();
  const CliRun r = Invoke({"--csv", path, "tables", "--which", "3", "--rows",
                        "1..2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "n,m_k");
  EXPECT_EQ(row, "4,1 2 2 3 5");
  std::filesystem::remove(path);
}

TEST(CliTest, TableTwoRowsMatch) {
  const CliRun r = Invoke({"tables", "--which", "2", "--rows", "1..6"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("0 mismatches"), std::string::npos);
}

TEST(CliTest, TextOutput) {
  const CliRun r = Invoke({"lp", "--n", "6", "--dset", "5,6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("floored 30"), std::string::npos);
  EXPECT_EQ(Invoke({"--version"}).out, std::string(kVersion) + "\n");
}

}  // namespace
}  // namespace permcode
