// Copyright 2026 The profam Authors
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

// Runs the built profam binary and inspects exit codes and certificates.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "profam/io.hpp"

namespace profam {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult RunCli(const std::string& args) {
  const std::string cmd = std::string(PROFAM_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path TempDir() {
  const fs::path dir = fs::temp_directory_path() / ("profam_cli_" + std::to_string(getpid()));
  fs::create_directories(dir);
  return dir;
}

Json WithoutWallTime(Json j) {
  j.erase("wall_time");
  return j;
}

TEST(CliTest, HelpExitsZero) {
  const RunResult r = RunCli("--help");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli("").exit_code, 2);
  EXPECT_EQ(RunCli("nonsense").exit_code, 2);
  EXPECT_EQ(RunCli("torus nf --p x").exit_code, 2);
  EXPECT_EQ(RunCli("tsys bfs --from 1").exit_code, 2);
  EXPECT_EQ(RunCli("torus nf --word \"x*w\"").exit_code, 2);
}

TEST(CliTest, MissingInputIsIoError) {
  EXPECT_EQ(RunCli("fingroup krasner --input /nonexistent/ext.json").exit_code, 4);
  EXPECT_EQ(RunCli("tsys orbits --group /nonexistent/q.json").exit_code, 4);
}

TEST(CliTest, NormalFormCertificate) {
  const RunResult r = RunCli("torus nf --p 3 --q 3 --word \"x^3*y^-3*x*y\"");
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("command"), "torus nf");
  EXPECT_EQ(j.at("result").at("central"), 0);
  EXPECT_EQ(j.at("result").at("syllables"), Json::parse(R"([["x",1],["y",1]])"));
  EXPECT_TRUE(j.contains("version"));
  EXPECT_TRUE(j.contains("wall_time"));
}

TEST(CliTest, Example32CertificateHasFiveChecks) {
  const RunResult r = RunCli("verify example32");
  EXPECT_EQ(r.exit_code, 3);
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j.at("checks").size(), 5u);
  EXPECT_EQ(j.at("status"), "fail");
  EXPECT_EQ(j.at("checks")[4].at("status"), "fail");
}

TEST(CliTest, SeededSuitesAreDeterministic) {
  const RunResult a = RunCli("verify gaschutz --seed 5");
  const RunResult b = RunCli("verify gaschutz --seed 5");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(WithoutWallTime(Json::parse(a.out)).dump(), WithoutWallTime(Json::parse(b.out)).dump());
  const RunResult c = RunCli("verify gaschutz --seed 6");
  EXPECT_EQ(c.exit_code, 0);
}

TEST(CliTest, FamilyFileRoundTrip) {
  const fs::path dir = TempDir();
  const fs::path fam = dir / "family.json";
  ASSERT_EQ(RunCli("family build --pairs 2 --out " + fam.string()).exit_code, 0);
  ASSERT_TRUE(fs::exists(fam));
  const RunResult r = RunCli("family congruence --family " + fam.string() + " --mod 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out).at("checks")[0].at("status"), "pass");
  fs::remove_all(dir);
}

TEST(CliTest, BfsReportsInconclusive) {
  const RunResult r = RunCli("tsys bfs --p 3 --q 3 --from 1,1 --to 4,5 --depth 4 --cap 60");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out).at("result").at("status"), "inconclusive");
}

TEST(CliTest, KrasnerFromFileAndOrbits) {
  const fs::path dir = TempDir();
  const Json c4 = GroupToJson(CyclicGroup(4));
  {
    std::ofstream(dir / "ext.json") << Json{{"group", c4}, {"kernel", {0, 2}}}.dump();
    std::ofstream(dir / "bad.json") << Json{{"group", c4}, {"kernel", {0, 1}}}.dump();
    std::ofstream(dir / "q.json") << GroupToJson(CyclicGroup(5)).dump();
  }
  EXPECT_EQ(RunCli("fingroup krasner --input " + (dir / "ext.json").string()).exit_code, 0);
  EXPECT_EQ(RunCli("fingroup krasner --input " + (dir / "bad.json").string()).exit_code, 3);
  const RunResult r = RunCli("tsys orbits --group " + (dir / "q.json").string() + " --d 1 --mode tsystem");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out).at("result").at("count"), 1);
  fs::remove_all(dir);
}

TEST(CliTest, LibraryDirectoryOverride) {
  const fs::path dir = TempDir() / "lib";
  fs::create_directories(dir);
  std::ofstream(dir / "Z2.json") << GroupToJson(CyclicGroup(2)).dump();
  setenv("PF_LIBRARY_DIR", dir.c_str(), 1);
  const RunResult r = RunCli("family fingerprint --pairs 2 --max-order 4");
  unsetenv("PF_LIBRARY_DIR");
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  const Json& fp = j.at("result").at("members")[0].at("fingerprint");
  ASSERT_EQ(fp.size(), 1u);
  EXPECT_EQ(fp[0].at("group"), "Z2");
  EXPECT_EQ(fp[0].at("homs"), 64);
  fs::remove_all(dir.parent_path());
}

TEST(CliTest, PhiMatrixToFile) {
  const fs::path dir = TempDir();
  const fs::path out = dir / "matrix.json";
  ASSERT_EQ(RunCli("reps phi --word \"x*y^-1\" --out " + out.string()).exit_code, 0);
  const Json j = ReadJsonFile(out);
  EXPECT_EQ(j.at("result").at("matrix").at("rows"), 12);
  EXPECT_TRUE(MatrixFromJson(j.at("result").at("matrix")).IsUnimodular());
  fs::remove_all(dir);
}

TEST(CliTest, AutF9NamingFlag) {
  const Json zero = Json::parse(RunCli("reps autf9").out);
  const Json one = Json::parse(RunCli("reps autf9 --one-based").out);
  EXPECT_EQ(zero.at("result").at("f0")[0], "x0*x1");
  EXPECT_EQ(one.at("result").at("f1")[0], "x1*x2");
}

}  // namespace
}  // namespace profam
