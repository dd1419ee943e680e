// Copyright 2026 The CMAB Lab Authors. All rights reserved.
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

#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cmab::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cmab_lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status =
      Main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cmab_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, RunWithConfigFile) {
  std::ofstream(Path("c.cfg")) << "algorithm = cucb\nm = 6\nk = 2\n"
                                  "horizon = 300\nruns = 2\n";
  const auto r = Invoke({"run", "--config", Path("c.cfg"), "--out", Path("r")});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(fs::exists(Path("r.csv")));
  EXPECT_TRUE(fs::exists(Path("r.summary.json")));
  EXPECT_TRUE(fs::exists(Path("r.runtime.json")));
  EXPECT_NE(ReadFile(Path("r.summary.json")).find("\"algorithm\": \"cucb\""),
            std::string::npos);
}

TEST_F(CliTest, FlagsOverrideConfig) {
  std::ofstream(Path("c.cfg")) << "algorithm = cucb\nhorizon = 300\nruns = 1\n";
  const auto r = Invoke({"run", "--config", Path("c.cfg"), "--algorithm", "exp3m",
                      "--m", "5", "--k", "2", "--out", Path("r")});
  ASSERT_EQ(r.status, 0) << r.err;
  const std::string summary = ReadFile(Path("r.summary.json"));
  EXPECT_NE(summary.find("\"algorithm\": \"exp3m\""), std::string::npos);
  EXPECT_NE(summary.find("\"horizon\": 300"), std::string::npos);
  EXPECT_NE(summary.find("\"m\": 5"), std::string::npos);
}

TEST_F(CliTest, RepeatedRunIsByteIdentical) {
  const std::vector<std::string> common = {"--m", "6", "--k", "2", "--horizon",
                                           "500", "--runs", "3",
                                           "--algorithm", "hybrid"};
  auto a = common;
  a.insert(a.begin(), "run");
  a.insert(a.end(), {"--out", Path("a")});
  auto b = common;
  b.insert(b.begin(), "run");
  b.insert(b.end(), {"--out", Path("b")});
  ASSERT_EQ(Invoke(a).status, 0);
  ASSERT_EQ(Invoke(b).status, 0);
  EXPECT_EQ(ReadFile(Path("a.csv")), ReadFile(Path("b.csv")));
  // The summary echoes the output prefix, so compare everything but it.
  auto strip = [](std::string s) {
    const auto pos = s.find("\"out\"");
    return s.erase(pos, s.find('\n', pos) - pos);
  };
  EXPECT_EQ(strip(ReadFile(Path("a.summary.json"))),
            strip(ReadFile(Path("b.summary.json"))));
}

TEST_F(CliTest, CompareWritesTable) {
  const auto r = Invoke({"compare", "--m", "6", "--k", "2", "--horizon", "200",
                      "--runs", "2", "--out", Path("cmp")});
  ASSERT_EQ(r.status, 0) << r.err;
  const std::string table = ReadFile(Path("cmp.compare.csv"));
  for (const char* alg : {"\ncmoss,", "\ncucb,", "\nexp3m,", "\nhybrid,"}) {
    EXPECT_NE(table.find(alg), std::string::npos) << alg;
  }
  EXPECT_TRUE(fs::exists(Path("cmp.hybrid.csv")));
}

TEST_F(CliTest, CompareInCascadeDefaultsToUcbPolicies) {
  const auto r = Invoke({"compare", "--m", "6", "--k", "2", "--horizon", "200",
                      "--runs", "1", "--feedback", "cascade_disjunctive",
                      "--no-click", "observe_zeros", "--out", Path("cmp")});
  ASSERT_EQ(r.status, 0) << r.err;
  const std::string table = ReadFile(Path("cmp.compare.csv"));
  EXPECT_NE(table.find("\ncucb,"), std::string::npos);
  EXPECT_EQ(table.find("exp3m"), std::string::npos);
}

TEST_F(CliTest, SweepOverK) {
  const auto r = Invoke({"sweep", "--vary", "k", "--values", "1,2,3", "--algorithm",
                      "cmoss,cucb", "--m", "6", "--horizon", "100", "--runs",
                      "1", "--out", Path("sw")});
  ASSERT_EQ(r.status, 0) << r.err;
  const std::string table = ReadFile(Path("sw.sweep.csv"));
  EXPECT_NE(table.find("\nk,3,cucb,"), std::string::npos);
  EXPECT_TRUE(fs::exists(Path("sw.k2.cmoss.csv")));
}

TEST_F(CliTest, Errors) {
  EXPECT_NE(Invoke({"run", "--bogus"}).status, 0);
  EXPECT_NE(Invoke({}).status, 0);
  const auto bad = Invoke({"run", "--m", "3", "--k", "5", "--out", Path("x")});
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.err.find("k (=5)"), std::string::npos) << bad.err;
  EXPECT_EQ(Invoke({"compare", "--algorithm", "exp3m", "--feedback",
                 "cascade_conjunctive", "--out", Path("x")})
                .status,
            1);
  EXPECT_NE(Invoke({"sweep", "--vary", "delta", "--values", "1"}).status, 0);
  EXPECT_EQ(Invoke({"run", "--config", Path("missing.cfg")}).status, 1);
}

TEST_F(CliTest, HelpDocumentsEveryFlag) {
  const auto r = Invoke({"run", "--help"});
  EXPECT_EQ(r.status, 0);
  for (const char* flag :
       {"--config", "--algorithm", "--m", "--k", "--horizon", "--delta",
        "--gamma", "--feedback", "--order", "--no-click", "--means",
        "--instance-seed", "--seed", "--runs", "--threads", "--out"}) {
    EXPECT_NE(r.out.find(flag), std::string::npos) << flag;
  }
  const auto sweep = Invoke({"sweep", "--help"});
  EXPECT_NE(sweep.out.find("--vary"), std::string::npos);
  EXPECT_NE(sweep.out.find("--values"), std::string::npos);
}

}  // namespace
}  // namespace cmab::cli
