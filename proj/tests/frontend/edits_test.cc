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

#include "viperkit/frontend/edits.h"

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "testing/random_programs.h"
#include "viperkit/frontend/parser.h"

namespace viperkit::frontend {
namespace {

TEST(EditsTest, EmptyScriptIsIdentity) {
  const std::string source = "int a;\r\n\tchar b[3];  \nno newline";
  EXPECT_EQ(source, ApplyEdits(source, EditScript()));
  for (const std::string& name : ::viperkit::testing::TestDataFiles()) {
    std::string s = ::viperkit::testing::ReadTestData(name);
    EXPECT_EQ(s, ApplyEdits(s, EditScript())) << name;
  }
}

TEST(EditsTest, ReplaceSpanOverLiteral) {
  const std::string source = "char d[10];";
  std::size_t at = source.find("10");
  EXPECT_EQ("char d[9];", ApplyEdits(source, EditScript().ReplaceSpan(at, at + 2, "9")));
}

TEST(EditsTest, InsertBeforeFirstBodyLine) {
  const std::string source = "void f() {\n    g();\n}\n";
  std::string out = ApplyEdits(source, EditScript().InsertBefore(2, "printf(\"\");"));
  EXPECT_EQ("void f() {\n    printf(\"\");\n    g();\n}\n", out);
  EXPECT_EQ(4, CountLines(out));
  EXPECT_NO_THROW(Parse(out));
}

TEST(EditsTest, ReplaceAndDeleteLines) {
  const std::string source = "a\nb\nc\nd";
  EditScript script;
  script.ReplaceLine(2, "B").DeleteLine(3).ReplaceLine(4, "D");
  EditResult r = ApplyEditsWithLineMap(source, script);
  EXPECT_EQ("a\nB\nD", r.text);
  EXPECT_EQ((std::vector<int>{1, 2, 0, 3}), r.line_map);
}

TEST(EditsTest, InsertionsKeepScriptOrder) {
  EditScript script;
  script.InsertBefore(1, "x").InsertBefore(1, "y").ReplaceLine(1, "z");
  EditResult r = ApplyEditsWithLineMap("a\n", script);
  EXPECT_EQ("x\ny\nz\n", r.text);
  EXPECT_EQ((std::vector<int>{3}), r.line_map);
}

TEST(EditsTest, MultiLineInsertCopiesIndentation) {
  std::string out = ApplyEdits("{\n\t x;\n}\n", EditScript().InsertBefore(2, "a;\nb;"));
  EXPECT_EQ("{\n\t a;\n\t b;\n\t x;\n}\n", out);
}

TEST(EditsTest, OverlapIsRejected) {
  const std::string source = "abcdef\nxyz\n";
  EXPECT_THROW(ApplyEdits(source, EditScript().ReplaceSpan(1, 4, "").ReplaceSpan(3, 5, "")),
               OverlapError);
  EXPECT_THROW(ApplyEdits(source, EditScript().ReplaceLine(1, "q").ReplaceSpan(2, 3, "")),
               OverlapError);
  EXPECT_THROW(ApplyEdits(source, EditScript().ReplaceSpan(0, 4, "").ReplaceSpan(2, 2, "i")),
               OverlapError);
  // Touching ranges are fine.
  EXPECT_EQ("Xef\nxyz\n",
            ApplyEdits(source, EditScript().ReplaceSpan(0, 2, "X").ReplaceSpan(2, 4, "")));
}

TEST(EditsTest, OutOfBoundsIsRejected) {
  const std::string source = "a\nb\n";
  EXPECT_THROW(ApplyEdits(source, EditScript().ReplaceLine(3, "c")), OutOfBoundsError);
  EXPECT_THROW(ApplyEdits(source, EditScript().DeleteLine(0)), OutOfBoundsError);
  EXPECT_THROW(ApplyEdits(source, EditScript().ReplaceSpan(2, 9, "")), OutOfBoundsError);
  EXPECT_THROW(ApplyEdits(source, EditScript().ReplaceSpan(2, 1, "")), OutOfBoundsError);
}

TEST(EditsTest, CountLines) {
  EXPECT_EQ(0, CountLines(""));
  EXPECT_EQ(1, CountLines("a"));
  EXPECT_EQ(1, CountLines("a\n"));
  EXPECT_EQ(2, CountLines("a\n\n"));
}

// Compares random line edits against a naive vector-of-lines model.
TEST(EditsTest, LineEditsMatchVectorModel) {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 500; ++iter) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::string> lines;
    std::string source;
    for (int i = 0; i < n; ++i) {
      lines.push_back("l" + std::to_string(i));
      source += lines.back() + "\n";
    }
    // Each line gets at most one of: nothing, replace, delete; plus optional
    // insertions before it.
    EditScript script;
    std::vector<std::string> model;
    std::vector<int> model_map;
    for (int i = 0; i < n; ++i) {
      int inserts = static_cast<int>(rng() % 3) == 0 ? 1 : 0;
      for (int k = 0; k < inserts; ++k) {
        script.InsertBefore(i + 1, "ins" + std::to_string(i));
        model.push_back("ins" + std::to_string(i));
      }
      switch (rng() % 3) {
        case 0:
          model.push_back(lines[i]);
          model_map.push_back(static_cast<int>(model.size()));
          break;
        case 1:
          script.ReplaceLine(i + 1, "r" + std::to_string(i));
          model.push_back("r" + std::to_string(i));
          model_map.push_back(static_cast<int>(model.size()));
          break;
        default:
          script.DeleteLine(i + 1);
          model_map.push_back(0);
          break;
      }
    }
    std::string expected;
    for (const std::string& l : model) expected += l + "\n";
    EditResult r = ApplyEditsWithLineMap(source, script);
    ASSERT_EQ(expected, r.text);
    ASSERT_EQ(model_map, r.line_map);
  }
}

}  // namespace
}  // namespace viperkit::frontend
