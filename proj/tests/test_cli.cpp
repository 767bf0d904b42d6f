// Copyright 2026 The Poncelet Loci Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "poncelet/cli.hpp"

namespace poncelet {
namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("poncelet_cli_test_" + name)).string();
}

TEST(CliLocus, IncenterWritesJson) {
  const std::string path = temp_path("x1.json");
  const CliRun r = run({"locus", "--family", "confocal", "--ab", "1.5", "--center", "1", "--samples",
                     "720", "--format", "json", "--out", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "X1(E)\n");
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["loci"][0]["points"].size(), 720u);
  std::filesystem::remove(path);
}

TEST(CliLocus, MittenpunktStationary) {
  const CliRun r = run({"locus", "--family", "confocal", "--center", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "X9(*)\n");
}

TEST(CliLocus, SvgExport) {
  const std::string path = temp_path("x.svg");
  const CliRun r = run({"locus", "--family", "incircle", "--center", "3", "--format", "svg", "--out", path});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("<polyline"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliLocus, MissingFamilyIsUsageError) {
  const CliRun r = run({"locus", "--center", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--family"), std::string::npos);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(CliLocus, ValidationAndComputeExitCodes) {
  EXPECT_EQ(run({"locus", "--family", "confocal", "--ab", "0.5"}).code, 2);
  EXPECT_EQ(run({"locus", "--family", "nope"}).code, 2);
  EXPECT_EQ(run({"locus", "--family", "confocal", "--center", "5555"}).code, 2);
  EXPECT_EQ(run({"locus", "--family", "confocal", "--bogus"}).code, 2);
  const CliRun r = run({"locus", "--family", "confocal", "--center", "511", "--samples", "64"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("all-samples-degenerate"), std::string::npos);
}

TEST(CliLocus, LenientSwapsAxes) {
  EXPECT_EQ(run({"locus", "--family", "confocal", "--ab", "0.5", "--lenient", "--center", "9"}).out,
            "X9(*)\n");
}

TEST(CliLocus, UrlAndConfig) {
  const CliRun r = run({"locus", "--url", "l2=xn&x2=2&l3=xn&x3=3&l4=xn&x4=4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "X1(E)\nX2(E)\nX3(E)\nX4(E)\n");
  const std::string path = temp_path("cfg.json");
  std::ofstream(path) << R"({"version":1,"family":{"kind":"homothetic","ab":2},
      "channels":[{"locus":"xn","center":2},{"locus":"off"},{"locus":"off"},{"locus":"off"}]})";
  EXPECT_EQ(run({"locus", "--config", path}).out, "X2(*)\n");
  std::filesystem::remove(path);
}

TEST(CliInvariants, BilliardLine) {
  const CliRun r = run({"invariants", "--family", "confocal", "--ab", "1.5"});
  EXPECT_EQ(r.code, 0);
  const std::string line = r.out.substr(0, r.out.find('\n'));
  EXPECT_NE(line.find("L="), std::string::npos);
  EXPECT_NE(line.find("r/R="), std::string::npos);
  const auto j = nlohmann::json::parse(r.out.substr(r.out.find('\n') + 1));
  EXPECT_EQ(j["line"], line);
}

TEST(CliInvariants, HomotheticLine) {
  const CliRun r = run({"invariants", "--family", "homothetic", "--ab", "1.5"});
  const std::string line = r.out.substr(0, r.out.find('\n'));
  EXPECT_NE(line.find("A="), std::string::npos);
  EXPECT_NE(line.find("cotω="), std::string::npos);
  EXPECT_EQ(line.find("L="), std::string::npos);
}

TEST(CliInvariants, LooseToleranceReportsMore) {
  const CliRun r = run({"invariants", "--family", "homothetic", "--ab", "1.2", "--tol", "1e-2"});
  EXPECT_NE(r.out.substr(0, r.out.find('\n')).find("L="), std::string::npos);
}

TEST(CliInvariants, ByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"invariants", "--family", "dual", "--ab", "2.5"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliVerify, DefaultMatrixPasses) {
  const CliRun r = run({"verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL "), std::string::npos);
}

TEST(CliVerify, SubsetAndPerturbation) {
  const CliRun subset = run({"verify", "--ab-sweep", "1.2"});
  EXPECT_EQ(subset.code, 0);
  EXPECT_EQ(subset.out.find("a/b=1.5"), std::string::npos);
  EXPECT_NE(subset.out.find("a/b=1.2"), std::string::npos);
  const CliRun bad = run({"verify", "--ab-sweep", "1.5", "--perturb-caustic", "0.01"});
  EXPECT_NE(bad.code, 0);
  EXPECT_NE(bad.out.find("FAIL  closure"), std::string::npos);
}

TEST(Cli, HelpAndNoSubcommand) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
}

}  // namespace
}  // namespace poncelet
