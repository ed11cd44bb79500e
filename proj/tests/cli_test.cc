// Copyright 2026 The CCCP Authors
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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;

const fs::path kData = CCCP_TEST_DATA_DIR;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cccp_cli_" + std::string(::testing::UnitTest::GetInstance()
                                          ->current_test_info()
                                          ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the cli with `args`, capturing stdout into out_.
  int Run(const std::string& args) {
    const fs::path out = dir_ / "stdout.txt";
    const std::string cmd = std::string("\"") + CCCP_CLI_PATH + "\" " + args +
                            " > \"" + out.string() + "\" 2> \"" +
                            (dir_ / "stderr.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    out_ = Slurp(out);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string Slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string Coverage() const { return (kData / "sample_coverage.csv").string(); }
  std::string Kills() const { return (kData / "sample_kills.csv").string(); }

  fs::path dir_;
  std::string out_;
};

TEST_F(Cli, PrioritizeCsvAndJson) {
  ASSERT_EQ(Run("prioritize --coverage " + Coverage() +
                " --technique total --seed 1"),
            0);
  EXPECT_EQ(out_.substr(0, out_.find('\n')), "position,index,label");
  EXPECT_NE(out_.find("3,2,tc3\n"), std::string::npos);
  ASSERT_EQ(Run("prioritize --coverage " + Coverage() +
                " --technique cccp --strength 2 --format json"),
            0);
  EXPECT_NE(out_.find("\"indices\""), std::string::npos);
}

TEST_F(Cli, EvaluateSavedOrder) {
  ASSERT_EQ(Run("prioritize --coverage " + Coverage() +
                " --technique additional --format json"),
            0);
  const fs::path order = dir_ / "order.json";
  std::ofstream(order) << out_;
  ASSERT_EQ(Run("evaluate --coverage " + Coverage() + " --faults " + Kills() +
                " --order " + order.string()),
            0);
  EXPECT_NE(out_.find("apfd,"), std::string::npos);
  EXPECT_NE(out_.find("apfd_c,"), std::string::npos);
}

TEST_F(Cli, CompareWritesReports) {
  const fs::path config = dir_ / "config.json";
  std::ofstream(config) << R"({"repetitions": 4, "timings": false,
                              "ga": {"population": 4, "generations": 2}})";
  const fs::path csv = dir_ / "r.csv", json = dir_ / "r.json";
  ASSERT_EQ(Run("compare --coverage " + Coverage() + " --faults " + Kills() +
                " --config " + config.string() + " --csv " + csv.string() +
                " --json " + json.string() + " --workers 2"),
            0);
  EXPECT_TRUE(fs::exists(csv));
  EXPECT_TRUE(fs::exists(json));
  EXPECT_NE(out_.find("cccp-1"), std::string::npos);
}

TEST_F(Cli, ReduceFaults) {
  ASSERT_EQ(Run("reduce-faults --faults " + Kills()), 0);
  // tc3 kills {f2, f3}; f2 = {tc2, tc3} is implied by f3 = {tc3}.
  EXPECT_EQ(out_, "test,f1,f3\ntc1,1,0\ntc2,0,0\ntc3,0,1\n");
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(Run("prioritize --coverage " + (dir_ / "none.csv").string() +
                " --technique total"),
            2);
  const fs::path bad = dir_ / "bad.csv";
  std::ofstream(bad) << "t1,1,2\n";
  EXPECT_EQ(Run("prioritize --coverage " + bad.string() + " --technique total"), 2);
  EXPECT_EQ(Run("prioritize --coverage " + Coverage() + " --technique magic"), 3);
  EXPECT_EQ(Run("prioritize --coverage " + Coverage() +
                " --technique cccp --strength 9"),
            3);
  EXPECT_EQ(Run("frobnicate"), 3);
}

}  // namespace
