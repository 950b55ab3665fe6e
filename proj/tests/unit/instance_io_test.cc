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

#include "hcsteiner/instance_io.h"

#include <sstream>

#include "gtest/gtest.h"
#include "hcsteiner/error.h"

namespace hcsteiner {
namespace {

SteinerInstance Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseInstance(in);
}

ErrorCategory CategoryOf(const std::string& text) {
  try {
    Parse(text);
  } catch (const Error& e) {
    return e.category();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCategory::kPrecondition;
}

TEST(InstanceIoTest, ParsesCommentsAndBlankLines) {
  const SteinerInstance inst =
      Parse("# header comment\n\nn=3\n000  # origin\n011\n\n101\n");
  EXPECT_EQ(inst.dim().value(), 3);
  EXPECT_EQ(FormatVertexSet(inst.terminals()), "000 101 011");
}

TEST(InstanceIoTest, RoundTrip) {
  const SteinerInstance inst = Parse("n=4\n1111\n0000\n0110\n");
  EXPECT_EQ(FormatInstance(inst), "n=4\n0000\n0110\n1111\n");
  EXPECT_TRUE(Parse(FormatInstance(inst)).terminals() == inst.terminals());
}

TEST(InstanceIoTest, Errors) {
  EXPECT_EQ(CategoryOf("000\n"), ErrorCategory::kParse);
  EXPECT_EQ(CategoryOf("n=x\n000\n"), ErrorCategory::kParse);
  EXPECT_EQ(CategoryOf("n=0\n"), ErrorCategory::kParse);
  EXPECT_EQ(CategoryOf("n=3\n"), ErrorCategory::kParse);
  EXPECT_EQ(CategoryOf("n=3\n0a0\n"), ErrorCategory::kParse);
  EXPECT_EQ(CategoryOf("n=3\n0000\n"), ErrorCategory::kDimensionMismatch);
  EXPECT_EQ(CategoryOf("n=3\n000\n000\n"), ErrorCategory::kPrecondition);
  EXPECT_THROW(ParseInstanceFile("/nonexistent/instance.txt"), Error);
}

TEST(InstanceIoTest, ErrorMentionsLine) {
  try {
    Parse("n=3\n000\n01\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(InstanceIoTest, ReadsCheckedInFiles) {
  const SteinerInstance inst =
      ParseInstanceFile(std::string(HCSTEINER_TEST_DATA_DIR) +
                        "/three_terminals.txt");
  EXPECT_EQ(inst.terminals().size(), 3u);
}

}  // namespace
}  // namespace hcsteiner
