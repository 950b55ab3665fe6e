// Copyright 2026 The hcsteiner Authors.
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

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace hcsteiner::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"hcsteiner"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = Main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

bool Contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

const std::string kData = HCSTEINER_TEST_DATA_DIR;

TEST(CliTest, ExactOnInstanceFile) {
  const Result r = Invoke({"exact", "--set", kData + "/three_terminals.txt"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.out.starts_with("d(S) = 3\n"));
  EXPECT_TRUE(Contains(r.out, "witness_valid: true"));
  EXPECT_TRUE(Contains(r.out, "seed: 0"));
}

TEST(CliTest, GroupVerifyHeadline) {
  const Result r = Invoke({"group-verify", "--n", "4"});
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.starts_with(
      "sharp edge transitivity: OK (32 elements, 32 edges, 1024 ordered "
      "pairs)\n"));
}

TEST(CliTest, BoundOmitsExactForLargeEvenClass) {
  const Result r = Invoke({"bound", "--n", "7", "--set", "even", "--format", "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(Contains(r.out, "\"lower\": \"452/7\""));
  EXPECT_TRUE(Contains(r.out, "\"exact\": null"));
  EXPECT_TRUE(Contains(r.out, "\"exact_omitted\": \"budget\""));
  EXPECT_TRUE(Contains(r.out, "\"sandwich_holds\": true"));
}

TEST(CliTest, BoundIncludesExactWhenAffordable) {
  const Result r = Invoke({"bound", "--n", "4", "--set", "even"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(Contains(r.out, "exact: 10"));
  EXPECT_TRUE(Contains(r.out, "lower: 13/2"));
}

TEST(CliTest, CsvFlattensNestedFields) {
  const Result r = Invoke({"cds", "--n", "3", "--format", "csv"});
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.starts_with("key,value\n"));
  EXPECT_TRUE(Contains(r.out, "certificate.size,4\n"));
  EXPECT_TRUE(Contains(r.out, "certificate.connected,true\n"));
}

TEST(CliTest, ExperimentTranscriptAsCsvTable) {
  const Result r = Invoke({"experiment", "--n", "3", "--set", "even",
                           "--exhaustive", "--transcript", "--format", "csv"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(Contains(r.out, "mean,25/12\n"));
  EXPECT_TRUE(Contains(r.out, "\n# transcript\nlambda1,lambda2,X\n"));
  EXPECT_TRUE(Contains(r.out, "s=0;m=000,s=0;m=000,"));
}

TEST(CliTest, SampledExperimentDependsOnSeed) {
  const std::vector<std::string> base{"experiment", "--n", "4", "--set",
                                      "even", "--samples", "300", "--transcript"};
  auto with_seed = [&](const std::string& seed) {
    std::vector<std::string> args = base;
    args.insert(args.end(), {"--seed", seed});
    return Invoke(args);
  };
  const Result a = with_seed("1");
  const Result b = with_seed("1");
  const Result c = with_seed("2");
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_TRUE(Contains(a.out, "seed: 1"));
}

TEST(CliTest, SdiamReportsExactForSmallCube) {
  const Result r = Invoke({"sdiam", "--n", "3", "--k", "8"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(Contains(r.out, "exact: 7"));
}

TEST(CliTest, ParseErrorsExitWithTwo) {
  EXPECT_EQ(Invoke({"exact", "--set", "inline:01x"}).status, 2);
  EXPECT_EQ(Invoke({"frobnicate"}).status, 2);
  EXPECT_EQ(Invoke({"cds"}).status, 2);
  const Result r = Invoke({"bound", "--n", "3", "--set", "even", "--format", "xml"});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(r.err.starts_with("error[parse]: "));
}

TEST(CliTest, DimensionMismatchExitsWithThree) {
  const Result r = Invoke({"exact", "--n", "4", "--set",
                           kData + "/three_terminals.txt", "--format", "json"});
  EXPECT_EQ(r.status, 3);
  EXPECT_TRUE(Contains(r.err, "error[dimension_mismatch]"));
  EXPECT_TRUE(Contains(r.out, "\"category\": \"dimension_mismatch\""));
}

TEST(CliTest, BudgetExceededExitsWithFour) {
  const Result r = Invoke({"exact", "--n", "6", "--set", "even",
                           "--budget-states", "1000"});
  EXPECT_EQ(r.status, 4);
  EXPECT_TRUE(Contains(r.err, "error[budget]"));
}

TEST(CliTest, BudgetMustBePositive) {
  EXPECT_EQ(Invoke({"exact", "--n", "3", "--set", "even", "--budget-states", "0"})
                .status,
            2);
}

TEST(CliTest, PreconditionExitsWithFive) {
  const Result r = Invoke({"cds", "--n", "4", "--method", "hamming"});
  EXPECT_EQ(r.status, 5);
  EXPECT_TRUE(Contains(r.err, "error[precondition]"));
  EXPECT_EQ(Invoke({"experiment", "--n", "3", "--set", "odd", "--exhaustive"})
                .status,
            5);
}

TEST(CliTest, HelpExitsCleanly) {
  const Result r = Invoke({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(Contains(r.out, "group-verify"));
}

}  // namespace
}  // namespace hcsteiner::cli
