// Copyright 2026 The sierpack Authors
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

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "sierpack/cli/run.h"
#include "sierpack/graph_io.h"
#include "sierpack/json.h"
#include "sierpack/packing.h"

namespace sierpack::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sierpack_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    unsetenv(kBudgetEnv);
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv(kBudgetEnv);
  }

  std::string Path(const std::string& name) const { return dir_ / name; }

  std::string WriteGraph(const std::string& name, const Graph& g) const {
    WriteTextFile(Path(name), FormatEdgeList(g));
    return Path(name);
  }

  int Call(const RunConfig& c) {
    out_.str("");
    err_.str("");
    return cli::Run(c, out_, err_);
  }

  Json Output() const { return Json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, ParseGraphSpec) {
  EXPECT_EQ(ParseGraphSpec("K4").size(), 6);
  EXPECT_EQ(ParseGraphSpec("P5").size(), 4);
  EXPECT_EQ(ParseGraphSpec("C5").size(), 5);
  EXPECT_EQ(ParseGraphSpec("S3").order(), 4);
  EXPECT_THROW(ParseGraphSpec("/nonexistent/graph.txt"), ParseError);
}

TEST_F(CliTest, ProductWritesGraphAndDot) {
  RunConfig c;
  c.command = Command::kProduct;
  c.base = "K2";
  c.fiber = "K2";
  c.map_constant = 0;
  c.output = Path("x.txt");
  c.dot_output = Path("x.dot");
  ASSERT_EQ(Call(c), kExitOk) << err_.str();
  const Json j = Output();
  EXPECT_EQ(j["order"], 4);
  EXPECT_EQ(j["size"], 3);
  const Graph x = ReadGraphFile(Path("x.txt"));
  EXPECT_EQ(x.order(), 4);
  EXPECT_TRUE(fs::exists(Path("x.dot")));
}

TEST_F(CliTest, ProductRejectsBadMap) {
  RunConfig c;
  c.command = Command::kProduct;
  c.base = "K3";
  c.fiber = "K3";
  c.map = "3 3: 0 1";
  EXPECT_EQ(Call(c), kExitParse);
}

TEST_F(CliTest, ChiRhoExactAndDecision) {
  RunConfig c;
  c.command = Command::kChiRho;
  c.input = WriteGraph("p4.txt", sierpack::Path(4));
  ASSERT_EQ(Call(c), kExitOk) << err_.str();
  Json j = Output();
  EXPECT_EQ(j["value"], 3);
  EXPECT_EQ(j["source"], "packing.exact");
  const PackingColoring col = ColoringFromJson(j["coloring"], sierpack::Path(4));
  EXPECT_EQ(col.k(), 3);

  c.decision_k = 2;
  EXPECT_EQ(Call(c), kExitOk);
  EXPECT_EQ(Output()["status"], "unsat");
  c.decision_k = 3;
  EXPECT_EQ(Call(c), kExitOk);
  EXPECT_EQ(Output()["status"], "sat");
}

TEST_F(CliTest, BudgetFromEnvironment) {
  RunConfig c;
  c.command = Command::kChiRho;
  c.input = WriteGraph("corona.txt", Corona(sierpack::Path(12), 2));
  setenv(kBudgetEnv, "5", 1);
  EXPECT_EQ(EffectiveBudget(c), 5);
  EXPECT_EQ(Call(c), kExitBudget);
  const Json j = Output();
  EXPECT_EQ(j["status"], "unknown");
  EXPECT_LE(j["lower_bound"].get<int>(), 6);
  EXPECT_GE(j["upper_bound"].get<int>(), 6);
  c.node_budget = 1'000'000'000;
  EXPECT_EQ(EffectiveBudget(c), 1'000'000'000);
  EXPECT_EQ(Call(c), kExitOk);
  c.node_budget = 0;
  EXPECT_EQ(Call(c), kExitParse);
  unsetenv(kBudgetEnv);
  c.node_budget.reset();
  EXPECT_EQ(EffectiveBudget(c), 0);
  setenv(kBudgetEnv, "abc", 1);
  c.node_budget.reset();
  EXPECT_EQ(Call(c), kExitParse);
}

TEST_F(CliTest, ChiRhoMissingFile) {
  RunConfig c;
  c.command = Command::kChiRho;
  c.input = Path("missing.txt");
  EXPECT_EQ(Call(c), kExitParse);
}

TEST_F(CliTest, SChiRhoReportsStatedValue) {
  RunConfig c;
  c.command = Command::kSChiRho;
  c.base = "K3";
  c.fiber = "K3";
  ASSERT_EQ(Call(c), kExitOk) << err_.str();
  Json j = Output();
  EXPECT_EQ(j["value"], 5);
  EXPECT_EQ(j["stated"]["value"], 5);
  EXPECT_EQ(j["agrees_with_stated"], true);
  c.mode = "max";
  c.reduce_symmetry = true;
  ASSERT_EQ(Call(c), kExitOk);
  EXPECT_EQ(Output()["value"], 5);
}

TEST_F(CliTest, FamilyValuesAndColorings) {
  RunConfig c;
  c.command = Command::kFamily;
  c.family = "corona";
  c.params = "n=35,p=4";
  ASSERT_EQ(Call(c), kExitOk) << err_.str();
  EXPECT_EQ(Output()["value"]["value"], 7);
  EXPECT_EQ(Output()["value"]["source"], "corona.p_ge_4");

  c.family = "path_star";
  c.params = "m=14,n=3";
  c.emit_coloring = Path("col.json");
  ASSERT_EQ(Call(c), kExitOk) << err_.str();
  EXPECT_EQ(Output()["value"]["source"], "path_star.min");
  EXPECT_EQ(Output()["construction"]["status"], "pattern");
  EXPECT_TRUE(fs::exists(Path("col.json")));

  c.family = "no_such_family";
  EXPECT_EQ(Call(c), kExitParse);
  c.family = "complete_pair";
  c.params = "m=2,n=3";
  c.emit_coloring.clear();
  EXPECT_EQ(Call(c), kExitRejected);
}

TEST_F(CliTest, Recognize) {
  RunConfig c;
  c.command = Command::kRecognize;
  c.input = WriteGraph("p6.txt", sierpack::Path(6));
  ASSERT_EQ(Call(c), kExitOk) << err_.str();
  EXPECT_EQ(Output()["status"], "factored");
  c.input = WriteGraph("star.txt", Star(11));
  EXPECT_EQ(Call(c), kExitOk);
  EXPECT_EQ(Output()["status"], "not_a_product");
}

}  // namespace
}  // namespace sierpack::cli
