// Copyright 2026 The viperkit Authors
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

#include "viperkit/frontend/formatter.h"

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "testing/random_programs.h"
#include "viperkit/frontend/lexer.h"
#include "viperkit/frontend/parser.h"

namespace viperkit::frontend {
namespace {

// Token texts including comments and directives.
std::vector<std::string> AllTokens(const std::string& source) {
  std::vector<std::string> out;
  for (const Token& t : Lex(source)) out.push_back(t.text);
  return out;
}

TEST(FormatterTest, OneLineFunction) {
  EXPECT_EQ("int f() {\n    return 0;\n}\n", NormalizeFormatting("int f(){return 0;}").text);
}

TEST(FormatterTest, GoldenFile) {
  std::string input = ::viperkit::testing::ReadTestData("format_input.c");
  std::string expected = ::viperkit::testing::ReadTestData("format_expected.txt");
  FormatResult r = NormalizeFormatting(input);
  EXPECT_EQ(expected, r.text);
  EXPECT_EQ(AllTokens(input), AllTokens(r.text));
  // Line 4 holds the FLAW comment; the comment keeps pointing at f.
  EXPECT_EQ(5, r.line_map[3]);
  EXPECT_EQ(6, r.line_map[4]);
}

TEST(FormatterTest, TabsAndTrailingSpaces) {
  std::string input = "void f()\n{\n\tint x;   \n\tx = 1;\t\n}\n";
  FormatResult r = NormalizeFormatting(input);
  EXPECT_EQ("void f() {\n    int x;\n    x = 1;\n}\n", r.text);
  EXPECT_EQ(AllTokens(input), AllTokens(r.text));
  EXPECT_EQ(std::string::npos, r.text.find('\t'));
  EXPECT_EQ(std::string::npos, r.text.find(" \n"));
}

TEST(FormatterTest, AlreadyNormalizedIsFixedPoint) {
  std::string expected = ::viperkit::testing::ReadTestData("format_expected.txt");
  EXPECT_EQ(expected, NormalizeFormatting(expected).text);
}

TEST(FormatterTest, MergeGuardKeepsTokensApart) {
  std::string input = "void f(){ x = - -y; z = a - -1; w = a+ +b; }";
  FormatResult r = NormalizeFormatting(input);
  EXPECT_EQ(AllTokens(input), AllTokens(r.text));
}

TEST(FormatterTest, PropagatesSyntaxError) {
  EXPECT_THROW(NormalizeFormatting("int f(){ goto l; }"), SyntaxError);
}

TEST(FormatterTest, IdempotentAndTokenPreservingOnRandomPrograms) {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 300; ++i) {
    std::string source = ::viperkit::testing::RandomProgram(rng, {});
    FormatResult once = NormalizeFormatting(source);
    ASSERT_EQ(AllTokens(source), AllTokens(once.text)) << source;
    ASSERT_EQ(once.text, NormalizeFormatting(once.text).text) << source;
  }
}

TEST(FormatterTest, IdempotentOnFixtures) {
  for (const std::string& name : ::viperkit::testing::TestDataFiles()) {
    std::string source = ::viperkit::testing::ReadTestData(name);
    FormatResult once;
    try {
      once = NormalizeFormatting(source);
    } catch (const SyntaxError&) {
      continue;
    }
    EXPECT_EQ(AllTokens(source), AllTokens(once.text)) << name;
    EXPECT_EQ(once.text, NormalizeFormatting(once.text).text) << name;
  }
}

}  // namespace
}  // namespace viperkit::frontend
