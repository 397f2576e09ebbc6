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

#include "viperkit/detect/detector.h"

#include <gtest/gtest.h>

#include "testing/random_programs.h"
#include "viperkit/detect/annotate.h"

namespace viperkit::detect {
namespace {

using cpg::ConstValue;

std::vector<FeatureWitness> Detect(const std::string& body,
                                   std::optional<std::set<int>> lines = std::set<int>{}) {
  DetectionOutcome out = DetectSource("s", "void f(char *s, int i, int k) {\n" + body + "}\n",
                                      lines);
  EXPECT_FALSE(out.error.has_value()) << *out.error;
  for (const FeatureWitness& w : out.witnesses) EXPECT_EQ(CheckWitness(w), "") << body;
  return out.witnesses;
}

std::vector<std::string> Names(const std::vector<FeatureWitness>& ws) {
  std::vector<std::string> out;
  for (const FeatureWitness& w : ws) out.emplace_back(FeatureName(w.feature));
  return out;
}

using V = std::vector<std::string>;

TEST(OverflowTest, IncorrectBufferSize) {
  DetectionOutcome out = DetectSource("ibs", testing::ReadTestData("incorrect_buffer_size.c"),
                                      std::nullopt);
  ASSERT_EQ(out.witnesses.size(), 1u);
  const FeatureWitness& w = out.witnesses[0];
  EXPECT_EQ(w.feature, FeatureId::kIBS);
  EXPECT_EQ(w.sample_id, "ibs");
  EXPECT_EQ(w.lines.at("def_line"), 6);
  EXPECT_EQ(w.lines.at("use_line"), 8);
  EXPECT_EQ(w.vars.at("dest"), "data");
  EXPECT_EQ(w.constants.at("LEN_d"), ConstValue::Of(10));
  EXPECT_EQ(w.constants.at("n"), ConstValue::Of(40));
  EXPECT_EQ(w.AnchorLine(), 8);
}

TEST(OverflowTest, SourceSizedCopyPrefersBsb) {
  auto ws = Detect("  char d[10];\n  char t[40];\n  memcpy(d, t, 40);\n");
  ASSERT_EQ(Names(ws), (V{"BSB"}));
  EXPECT_EQ(ws[0].constants.at("LEN_s"), ConstValue::Of(40));
  EXPECT_EQ(ws[0].lines.at("src_def_line"), 3);
}

TEST(OverflowTest, ExactFitIsClean) {
  EXPECT_TRUE(Detect("  char d[10];\n  memcpy(d, s, 10);\n").empty());
}

TEST(OverflowTest, OffByOne) {
  auto ws = Detect("  char b[7];\n  strncpy(b, s, 8);\n");
  ASSERT_EQ(Names(ws), (V{"OE"}));
  EXPECT_EQ(ws[0].constants.at("LEN_d"), ConstValue::Of(7));
}

TEST(OverflowTest, OverReadIsIndependent) {
  auto ws = Detect("  char d[100];\n  char t[10];\n  memcpy(d, t, 20);\n");
  EXPECT_EQ(Names(ws), (V{"BO"}));
  ws = Detect("  char d[10];\n  char t[10];\n  memcpy(d, t, 20);\n");
  EXPECT_EQ(Names(ws), (V{"IBS", "BO"}));
}

TEST(OverflowTest, AbstainsOnUnknown) {
  EXPECT_TRUE(Detect("  char d[10];\n  memcpy(d, s, k);\n").empty());
  EXPECT_TRUE(Detect("  char *d = malloc(k);\n  memset(d, 0, 20);\n").empty());
}

TEST(OverflowTest, HeapAndWideBuffers) {
  EXPECT_EQ(Names(Detect("  char *d = (char *)malloc(10);\n  memset(d, 0, 11);\n")), (V{"OE"}));
  EXPECT_EQ(Names(Detect("  wchar_t w[4];\n  wmemset(w, 0, 5);\n")), (V{"IBS"}));
  EXPECT_TRUE(Detect("  wchar_t w[4];\n  wmemset(w, 0, 4);\n").empty());
}

TEST(OverflowTest, EachReachingAllocationIsJudged) {
  auto ws = Detect(
      "  char *d;\n"
      "  if (k > 0) {\n"
      "    d = malloc(10);\n"
      "  } else {\n"
      "    d = malloc(100);\n"
      "  }\n"
      "  memset(d, 0, 50);\n");
  ASSERT_EQ(Names(ws), (V{"IBS"}));
  EXPECT_EQ(ws[0].lines.at("def_line"), 4);
}

TEST(DeallocTest, DoubleFree) {
  auto ws = Detect("  char *p = malloc(8);\n  free(p);\n  free(p);\n");
  ASSERT_EQ(Names(ws), (V{"DF"}));
  EXPECT_EQ(ws[0].lines.at("first_free_line"), 3);
  EXPECT_EQ(ws[0].lines.at("second_free_line"), 4);
  EXPECT_EQ(ws[0].vars.at("buffer"), "p");
}

TEST(DeallocTest, ReallocationBetweenFrees) {
  EXPECT_TRUE(Detect("  char *p = malloc(8);\n  free(p);\n  p = malloc(8);\n  free(p);\n")
                  .empty());
  EXPECT_TRUE(Detect("  char *p = malloc(8);\n  free(p);\n  p = NULL;\n  free(p);\n").empty());
  EXPECT_TRUE(Detect("  free(NULL);\n  free(NULL);\n").empty());
}

TEST(DeallocTest, UseAfterFree) {
  auto ws = Detect("  char *p = malloc(8);\n  free(p);\n  char x = p[0];\n");
  ASSERT_EQ(Names(ws), (V{"UAF"}));
  EXPECT_EQ(ws[0].lines.at("dealloc_line"), 3);
  EXPECT_EQ(ws[0].lines.at("use_line"), 4);
}

TEST(DeallocTest, OnlyLaterPathsCount) {
  EXPECT_TRUE(Detect("  char *p = malloc(8);\n  p[0] = 1;\n  free(p);\n").empty());
  auto ws = Detect(
      "  char *p = malloc(8);\n"
      "  if (k) {\n"
      "    free(p);\n"
      "  } else {\n"
      "    p[1] = 2;\n"
      "  }\n"
      "  g(p);\n");
  ASSERT_EQ(Names(ws), (V{"UAF"}));
  EXPECT_EQ(ws[0].lines.at("use_line"), 8);
}

TEST(DeallocTest, FreeInLoop) {
  auto ws = Detect("  char *p = malloc(8);\n  while (k > 0) {\n    free(p);\n    k--;\n  }\n");
  ASSERT_EQ(Names(ws), (V{"DF"}));
  EXPECT_EQ(ws[0].lines.at("first_free_line"), ws[0].lines.at("second_free_line"));
}

TEST(RangeCheckTest, UpperBoundOnly) {
  auto ws = Detect("  int b[10];\n  if (i < 10) {\n    b[i] = 1;\n  }\n");
  ASSERT_EQ(Names(ws), (V{"BUW"}));
  EXPECT_EQ(ws[0].lines.at("access_line"), 4);
  EXPECT_EQ(ws[0].lines.at("guard_line"), 3);
  EXPECT_EQ(ws[0].vars.at("index"), "i");
  EXPECT_EQ(ws[0].constants.at("LEN_b"), ConstValue::Of(40));
}

TEST(RangeCheckTest, AcceptedGuards) {
  EXPECT_TRUE(Detect("  int b[10];\n  if (i >= 0 && i < 10) {\n    b[i] = 1;\n  }\n").empty());
  EXPECT_TRUE(Detect("  int b[10];\n  int x;\n  if (i > -1) {\n    x = b[i];\n  }\n").empty());
  EXPECT_TRUE(Detect("  int b[10];\n  if (0 <= i) b[i] = 1;\n").empty());
  EXPECT_TRUE(Detect("  int b[10];\n  if (-1 < i && i < 10) b[i] = 1;\n").empty());
  EXPECT_TRUE(Detect("  int b[10];\n  if (i >= 2) {\n    if (i < 10) b[i] = 1;\n  }\n").empty());
  EXPECT_TRUE(Detect("  int b[10];\n  int x;\n  x = i >= 0 && b[i];\n").empty());
}

TEST(RangeCheckTest, RejectedGuards) {
  EXPECT_EQ(Names(Detect("  int b[10];\n  if (i > -2) b[i] = 1;\n")), (V{"BUW"}));
  EXPECT_EQ(Names(Detect("  int b[10];\n  if (i >= -1) b[i] = 1;\n")), (V{"BUW"}));
  EXPECT_EQ(Names(Detect("  int b[10];\n  if (i >= 0 || k) b[i] = 1;\n")), (V{"BUW"}));
  // A guard on the false branch is not one of the accepted shapes.
  EXPECT_EQ(Names(Detect("  int b[10];\n  if (i < 0) {\n    return;\n  }\n  b[i] = 1;\n")),
            (V{"BUW"}));
  // Guarding the wrong variable.
  EXPECT_EQ(Names(Detect("  int b[10];\n  int x;\n  if (k >= 0) x = b[i];\n")), (V{"BUR"}));
}

TEST(RangeCheckTest, ReadsWritesAndExemptions) {
  EXPECT_EQ(Names(Detect("  int b[10];\n  int x;\n  x = b[i];\n")), (V{"BUR"}));
  EXPECT_EQ(Names(Detect("  int b[10];\n  b[i]++;\n")), (V{"BUW"}));
  EXPECT_TRUE(Detect("  int b[10];\n  b[3] = 1;\n").empty());
  EXPECT_TRUE(Detect("  int b[10];\n  size_t u = 2;\n  b[u] = 1;\n").empty());
  EXPECT_TRUE(Detect("  int b[10];\n  int x = sizeof(b[i]);\n").empty());
}

TEST(SensitiveApiTest, ReadApiOnVulnerableLine) {
  auto ws = Detect("  char buf[64];\n  fgets(buf, 64, stdin);\n", std::set<int>{3});
  ASSERT_EQ(Names(ws), (V{"RA"}));
  EXPECT_EQ(ws[0].vars.at("callee"), "fgets");
  EXPECT_TRUE(Detect("  char buf[64];\n  fgets(buf, 64, stdin);\n", std::set<int>{2}).empty());
}

TEST(SensitiveApiTest, WriteApi) {
  EXPECT_EQ(Names(Detect("  char d[10];\n  memcpy(d, s, k);\n", std::set<int>{3})), (V{"WA"}));
  EXPECT_TRUE(Detect("  char d[10];\n  memcpy(d, s, k);\n", std::set<int>{}).empty());
  // The overflow feature owns the call.
  EXPECT_EQ(Names(Detect("  char d[10];\n  memcpy(d, s, 20);\n", std::set<int>{3})),
            (V{"IBS"}));
  // memmove is a copy API, not a sensitive write API.
  EXPECT_TRUE(Detect("  char d[10];\n  memmove(d, s, k);\n", std::set<int>{3}).empty());
}

TEST(SensitiveApiTest, DisabledWithoutLineTruth) {
  EXPECT_TRUE(Detect("  char d[10];\n  memcpy(d, s, k);\n", std::nullopt).empty());
}

TEST(DetectSourceTest, ReportsParseErrors) {
  DetectionOutcome out = DetectSource("bad", testing::ReadTestData("unsupported_goto.c"), {});
  EXPECT_TRUE(out.error.has_value());
  EXPECT_TRUE(out.witnesses.empty());
  out = DetectSource("bad", "void f(void) { break; }\n", {});
  EXPECT_TRUE(out.error.has_value());
}

TEST(DetectSourceTest, TwoWitnessesOnOneSample) {
  std::string src =
      "void f(char *s, int n) {\n"
      "  char *p = malloc(8);\n"
      "  free(p);\n"
      "  memcpy(p, s, n);\n"
      "}\n";
  DetectionOutcome out = DetectSource("two", src, std::set<int>{4});
  EXPECT_EQ(Names(out.witnesses), (V{"UAF", "WA"}));
  frontend::CodeSample sample;
  sample.sample_id = "two";
  sample.label = frontend::Label::kVulnerable;
  sample.vulnerable_lines = std::set<int>{4};
  AnnotatedSample a = AnnotateSample(sample, out.witnesses);
  EXPECT_EQ(a.witnesses.size(), 2u);
  EXPECT_EQ(AnnotatedFromJson(AnnotatedToJson(a)), a);
}

TEST(WitnessTest, SchemaChecks) {
  FeatureWitness w;
  w.feature = FeatureId::kIBS;
  EXPECT_NE(CheckWitness(w), "");
  w.lines = {{"def_line", 2}, {"use_line", 3}};
  w.vars = {{"dest", "d"}};
  w.constants = {{"LEN_d", ConstValue::Of(10)}, {"n", ConstValue::Of(10)}};
  EXPECT_EQ(CheckWitness(w), "constants violate the rule predicate");
  w.constants["n"] = ConstValue::Of(11);
  EXPECT_EQ(CheckWitness(w), "");
  EXPECT_EQ(WitnessFromJson(WitnessToJson(w)), w);
  w.constants["n"] = ConstValue::Unknown();
  EXPECT_EQ(CheckWitness(w), "missing constant n");
}

TEST(FeatureTest, NamesAndCwes) {
  EXPECT_EQ(FeatureName(FeatureId::kWA), "WA");
  EXPECT_EQ(FeatureRule(FeatureId::kWA), "2.10");
  EXPECT_EQ(FeatureCwe(FeatureId::kIBS), "CWE131");
  EXPECT_EQ(ParseFeature("UAF"), FeatureId::kUAF);
  EXPECT_FALSE(ParseFeature("XYZ").has_value());
  std::set<std::string_view> cwes;
  for (FeatureId f : kAllFeatures) {
    cwes.insert(FeatureCwe(f));
    EXPECT_EQ(ParseFeature(FeatureName(f)), f);
  }
  EXPECT_EQ(cwes.size(), 10u);
}

}  // namespace
}  // namespace viperkit::detect
