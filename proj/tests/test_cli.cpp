// Copyright 2026 The posemi Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "posemi/cli.hpp"
#include "posemi/constructions.hpp"
#include "posemi/posemiring.hpp"

namespace posemi::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(POSEMI_TEST_DATA) + "/" + name;
}

fs::path temp_path(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "posemi_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, ClassifyP4) {
  const auto r = run_cli({"classify", data("p4.edges")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("CompleteBipartiteHorn{1,1,1}"), std::string::npos);
  EXPECT_NE(r.out.find("posemiring: yes"), std::string::npos);
  EXPECT_NE(r.out.find("annihilating_ideal: yes"), std::string::npos);
}

TEST(Cli, ClassifyNegativeVerdictExitsOne) {
  const auto r = run_cli({"classify", data("k4_3.edges")});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_NE(r.out.find("posemiring: no"), std::string::npos);
}

TEST(Cli, SearchK43SemigroupExhausted) {
  const auto r = run_cli({"search", data("k4_3.edges"), "--structure", "semigroup"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_NE(r.out.find("status: exhausted"), std::string::npos);
  EXPECT_NE(r.out.find("tool_version: posemi"), std::string::npos);
}

TEST(Cli, SearchPosemiringStatesAuxBudget) {
  const auto r = run_cli({"search", data("k4_3.edges"), "--structure", "posemiring",
                          "--aux", "1", "--deterministic"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_NE(r.out.find("no witness with \xe2\x89\xa4 1 auxiliary elements"),
            std::string::npos);
  EXPECT_NE(r.out.find("verdict: no"), std::string::npos);
}

TEST(Cli, SearchWitnessAndLimit) {
  const auto w = temp_path("p4_witness.json");
  const auto r = run_cli({"search", data("p4.edges"), "--witness", w.string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("witness:"), std::string::npos);
  EXPECT_TRUE(nlohmann::json::parse(slurp(w)).contains("mul"));
  const auto l = run_cli({"search", data("k4_3.edges"), "--limit", "2"});
  EXPECT_EQ(l.code, kLimit);
  EXPECT_NE(l.out.find("status: limit-reached"), std::string::npos);
}

TEST(Cli, SearchIsByteDeterministic) {
  const std::vector<std::string> args{"search", data("p4.edges"), "--structure",
                                      "posemiring", "--aux", "1", "--deterministic"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, RingAgDot) {
  const auto dot = temp_path("ag.dot");
  const auto r = run_cli({"ring", "Z2xZ2xZ2", "--ag", dot.string()});
  EXPECT_EQ(r.code, kOk);
  const auto text = slurp(dot);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 6 + 6 + 1);
  EXPECT_NE(text.find("\"(0,0,1)\" -- \"(0,1,0)\""), std::string::npos);
}

TEST(Cli, RingIdealsAndChecks) {
  const auto r = run_cli({"ring", "Z12", "--ideals", "--check"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("(2) size 6"), std::string::npos);
  EXPECT_NE(r.out.find("check two-star-shape: pass"), std::string::npos);
  EXPECT_NE(r.out.find("result: pass"), std::string::npos);
}

TEST(Cli, RingPosemiringFileVerifies) {
  const auto psr = temp_path("z12.psr");
  ASSERT_EQ(run_cli({"ring", "Z12", "--posemiring", psr.string()}).code, kOk);
  const auto v = run_cli({"verify", psr.string()});
  EXPECT_EQ(v.code, kOk);
  EXPECT_NE(v.out.find("result: pass"), std::string::npos);
}

TEST(Cli, VerifyFailingStructureExitsOne) {
  const auto psr = temp_path("kn2_3.psr");
  std::ofstream(psr) << serialize_posemiring(build_kn2_printed(3, 1, 1));
  const auto v = run_cli({"verify", psr.string()});
  EXPECT_EQ(v.code, kNegative);
  EXPECT_NE(v.out.find("axiom distrib: fail ("), std::string::npos);
}

TEST(Cli, ConstructEmitsFileAndChecks) {
  const auto r = run_cli({"construct", "cbh", "--params", "1,1,1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, serialize_posemiring(build_cbh(1, 1, 1)));
  const auto c = run_cli({"construct", "kn2", "--params", "4,2,1", "--check"});
  EXPECT_EQ(c.code, kOk);
  EXPECT_NE(c.out.find("result: pass"), std::string::npos);
}

TEST(Cli, GraphReport) {
  const auto r = run_cli({"graph", data("k4_3.edges")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("core: a1 a2 a3 a4"), std::string::npos);
  EXPECT_NE(r.out.find("end vertices: x1 y1 z1"), std::string::npos);
}

TEST(Cli, StructuredFormat) {
  const auto r = run_cli({"--format", "structured", "classify", data("p4.edges")});
  EXPECT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["posemiring"]["verdict"], "yes");
  const auto s = run_cli({"search", data("k4_3.edges"), "--format", "structured"});
  EXPECT_EQ(s.code, kNegative);
  EXPECT_EQ(nlohmann::json::parse(s.out)["status"], "exhausted");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  const auto bad_flag = run_cli({"classify", data("p4.edges"), "--bogus"});
  EXPECT_EQ(bad_flag.code, kUsage);
  EXPECT_NE(bad_flag.err.find("--bogus"), std::string::npos);
  EXPECT_EQ(run_cli({"search", data("p4.edges"), "--structure", "group"}).code, kUsage);
  EXPECT_EQ(run_cli({"classify", "/nonexistent/file"}).code, kUsage);
  EXPECT_EQ(run_cli({"ring", "F4[x]/(x^2)"}).code, kUsage);
  EXPECT_EQ(run_cli({"construct", "kn2", "--params", "3,1,1"}).code, kUsage);
  EXPECT_EQ(run_cli({"construct", "nope"}).code, kUsage);
  EXPECT_EQ(run_cli({"--format", "xml", "classify", data("p4.edges")}).code, kUsage);
}

TEST(Cli, ParseErrorsExitTwo) {
  const auto bad = temp_path("bad.edges");
  std::ofstream(bad) << "a a\n";
  const auto r = run_cli({"classify", bad.string()});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("loop"), std::string::npos);
  const auto psr = temp_path("bad.psr");
  std::ofstream(psr) << "{\"elements\": [\n";
  EXPECT_EQ(run_cli({"verify", psr.string()}).code, kUsage);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("search"), std::string::npos);
}

}  // namespace
}  // namespace posemi::cli
