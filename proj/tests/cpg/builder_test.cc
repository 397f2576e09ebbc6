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

#include "viperkit/cpg/builder.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "testing/random_programs.h"
#include "viperkit/cpg/apis.h"
#include "viperkit/frontend/parser.h"

namespace viperkit::cpg {
namespace {

using frontend::Ast;
using frontend::Parse;

PropertyGraph BuildFirst(const std::string& source) {
  auto ast = std::make_shared<const Ast>(Parse(source));
  return BuildCpg(ast, ast->functions().at(0));
}

NodeId Find(const PropertyGraph& g, NodeKind kind, int line) {
  for (const GraphNode& n : g.nodes()) {
    if (n.kind == kind && n.line == line) return n.id;
  }
  ADD_FAILURE() << "no " << NodeKindName(kind) << " on line " << line;
  return kNoGraphNode;
}

bool HasEdge(const PropertyGraph& g, NodeId src, NodeId dst, EdgeKind kind) {
  for (EdgeId e : g.OutEdges(src, kind)) {
    if (g.edge(e).dst == dst) return true;
  }
  return false;
}

std::size_t CountEdges(const PropertyGraph& g, EdgeKind kind) {
  return std::count_if(g.edges().begin(), g.edges().end(),
                       [kind](const GraphEdge& e) { return e.kind == kind; });
}

TEST(BuilderTest, MemsetIntoCharArray) {
  PropertyGraph g = BuildFirst(testing::ReadTestData("incorrect_buffer_size.c"));
  NodeId ad = Find(g, NodeKind::kAD, 6);
  NodeId wf = Find(g, NodeKind::kWF, 8);
  EXPECT_TRUE(HasEdge(g, ad, wf, EdgeKind::kDD));
  EXPECT_EQ(g.GetString(Target::Edge(g.OutEdges(ad, EdgeKind::kDD)[0]), PropertyKey::kVar),
            "data");
  EXPECT_EQ(g.GetConst(Target::Node(ad), PropertyKey::kLen), ConstValue::Of(10));
  EXPECT_EQ(g.GetConst(Target::Node(wf), PropertyKey::kArgCount), ConstValue::Of(40));
  EXPECT_EQ(g.GetString(Target::Node(wf), PropertyKey::kArgDest), "data");
  EXPECT_EQ(g.GetString(Target::Node(wf), PropertyKey::kCallee), "memset");
  EXPECT_EQ(g.GetString(Target::Node(wf), PropertyKey::kApiClass), "write");
  EXPECT_EQ(g.GetString(Target::Node(ad), PropertyKey::kType), "AD");
  EXPECT_EQ(std::get<std::int64_t>(*g.Get(Target::Node(wf), PropertyKey::kLine)), 8);
  // memset has no source buffer.
  EXPECT_FALSE(g.Get(Target::Node(wf), PropertyKey::kArgSrc).has_value());
  // Properties that do not apply are ABSENT rather than an error.
  EXPECT_FALSE(g.Get(Target::Node(ad), PropertyKey::kArgCount).has_value());
  EXPECT_THROW(g.Get(Target::Node(9999), PropertyKey::kLen), UnknownTarget);
  EXPECT_THROW(g.Get(Target::Edge(9999), PropertyKey::kVar), UnknownTarget);
}

TEST(BuilderTest, StraightLineHasNoControlDependence) {
  PropertyGraph g = BuildFirst(
      "void f(void) {\n"
      "  char buf[8];\n"
      "  int n = 4;\n"
      "  memcpy(buf, \"abc\", n);\n"
      "  buf[0] = 0;\n"
      "}\n");
  EXPECT_EQ(CountEdges(g, EdgeKind::kCD), 0u);
  std::vector<NodeId> ipdom = ImmediatePostDominators(g);
  // ENTRY -> each statement -> EXIT.
  NodeId n = g.entry();
  std::vector<int> chain;
  while (n != g.exit()) {
    n = ipdom[n];
    ASSERT_NE(n, kNoGraphNode);
    chain.push_back(g.node(n).line);
  }
  EXPECT_EQ(chain, (std::vector<int>{2, 3, 4, 5, 6}));
  NodeId decl = Find(g, NodeKind::kDecl, 3);
  NodeId wf = Find(g, NodeKind::kWF, 4);
  EXPECT_TRUE(HasEdge(g, decl, wf, EdgeKind::kDD));
  EXPECT_EQ(g.GetConst(Target::Node(wf), PropertyKey::kArgCount), ConstValue::Unknown());
}

TEST(BuilderTest, IfElseControlDependence) {
  PropertyGraph g = BuildFirst(
      "void f(int k) {\n"
      "  char buf[8];\n"
      "  if (k > 0) {\n"
      "    buf[k] = 1;\n"
      "  } else {\n"
      "    buf[0] = 2;\n"
      "  }\n"
      "  buf[1] = 3;\n"
      "}\n");
  NodeId cond = Find(g, NodeKind::kCond, 3);
  NodeId then_node = Find(g, NodeKind::kAssign, 4);
  NodeId else_node = Find(g, NodeKind::kAssign, 6);
  NodeId after = Find(g, NodeKind::kAssign, 8);
  EXPECT_TRUE(HasEdge(g, cond, then_node, EdgeKind::kCD));
  EXPECT_TRUE(HasEdge(g, cond, else_node, EdgeKind::kCD));
  EXPECT_FALSE(HasEdge(g, cond, after, EdgeKind::kCD));
  EXPECT_EQ(ImmediatePostDominators(g)[cond], after);
  EdgeId cd = g.OutEdges(cond, EdgeKind::kCD)[0];
  EXPECT_EQ(g.GetString(Target::Edge(cd), PropertyKey::kBranch), "true");
  EXPECT_EQ(g.GetString(Target::Node(then_node), PropertyKey::kArgIndex), "k");
  // k flows from the parameter into both the condition and the index.
  EXPECT_TRUE(HasEdge(g, g.entry(), cond, EdgeKind::kDD));
  EXPECT_TRUE(HasEdge(g, g.entry(), then_node, EdgeKind::kDD));
}

TEST(BuilderTest, LoopsBreakAndContinue) {
  PropertyGraph g = BuildFirst(
      "int f(int b) {\n"
      "  int x = 0;\n"
      "  while (b > 0) {\n"
      "    b = b - 1;\n"
      "    if (b == 3) break;\n"
      "    if (b == 5) continue;\n"
      "    x = x + 1;\n"
      "  }\n"
      "  for (int i = 0; i < 4; i++) x = x + i;\n"
      "  return x;\n"
      "}\n");
  NodeId loop = Find(g, NodeKind::kCond, 3);
  NodeId dec = Find(g, NodeKind::kAssign, 4);
  NodeId brk = Find(g, NodeKind::kCond, 5);
  NodeId cont = Find(g, NodeKind::kCond, 6);
  NodeId inc = Find(g, NodeKind::kAssign, 7);
  EXPECT_TRUE(HasEdge(g, dec, dec, EdgeKind::kDD));
  EXPECT_TRUE(HasEdge(g, dec, loop, EdgeKind::kDD));
  EXPECT_TRUE(HasEdge(g, brk, loop, EdgeKind::kCD));
  EXPECT_TRUE(HasEdge(g, cont, inc, EdgeKind::kCD));
  EXPECT_TRUE(HasEdge(g, loop, dec, EdgeKind::kCD));
  // The for header, init, step and body each get their own node on line 9.
  int on_line_9 = 0;
  for (const GraphNode& n : g.nodes()) on_line_9 += n.line == 9 && n.kind != NodeKind::kVar;
  EXPECT_EQ(on_line_9, 4);
  NodeId ret = Find(g, NodeKind::kRet, 10);
  EXPECT_EQ(ImmediatePostDominators(g)[ret], g.exit());
}

TEST(BuilderTest, BufferLengths) {
  PropertyGraph g = BuildFirst(
      "void f(void) {\n"
      "  int a[10];\n"
      "  char *p = malloc(10);\n"
      "  wchar_t w[8];\n"
      "  int *q = (int *)calloc(5, sizeof(int));\n"
      "  char s[] = \"abcd\";\n"
      "  char *r = malloc(n);\n"
      "  char m[2][3];\n"
      "}\n");
  auto len = [&](NodeKind k, int line) {
    return g.GetConst(Target::Node(Find(g, k, line)), PropertyKey::kLen);
  };
  EXPECT_EQ(len(NodeKind::kAD, 2), ConstValue::Of(40));
  EXPECT_EQ(len(NodeKind::kAF, 3), ConstValue::Of(10));
  EXPECT_EQ(len(NodeKind::kAD, 4), ConstValue::Of(32));
  EXPECT_EQ(len(NodeKind::kAF, 5), ConstValue::Of(20));
  EXPECT_EQ(len(NodeKind::kAD, 6), ConstValue::Of(5));
  EXPECT_EQ(len(NodeKind::kAF, 7), ConstValue::Unknown());
  EXPECT_EQ(len(NodeKind::kAD, 8), ConstValue::Of(6));
}

TEST(BuilderTest, CallNodeKindsAndArguments) {
  PropertyGraph g = BuildFirst(
      "void f(char *src) {\n"
      "  wchar_t w[4];\n"
      "  char d[4];\n"
      "  char *h = malloc(4);\n"
      "  wcsncpy(w, L\"ab\", 4);\n"
      "  strcpy(d, \"abcd\");\n"
      "  memmove(d, src, 2);\n"
      "  fgets(d, 4, stdin);\n"
      "  free(h);\n"
      "  h[0] = 'x';\n"
      "  puts(d);\n"
      "  d[0] = getchar() + 1;\n"
      "}\n");
  NodeId wide = Find(g, NodeKind::kWF, 5);
  EXPECT_EQ(g.GetConst(Target::Node(wide), PropertyKey::kArgCount), ConstValue::Of(16));
  NodeId copy = Find(g, NodeKind::kWF, 6);
  EXPECT_EQ(g.GetConst(Target::Node(copy), PropertyKey::kArgCount), ConstValue::Of(5));
  NodeId move = Find(g, NodeKind::kCF, 7);
  EXPECT_EQ(g.GetString(Target::Node(move), PropertyKey::kArgSrc), "src");
  EXPECT_EQ(g.GetConst(Target::Node(move), PropertyKey::kArgCount), ConstValue::Of(2));
  Find(g, NodeKind::kRF, 8);
  NodeId fr = Find(g, NodeKind::kFree, 9);
  EXPECT_EQ(g.GetString(Target::Node(fr), PropertyKey::kArgDest), "h");
  NodeId use = Find(g, NodeKind::kAssign, 10);
  EXPECT_TRUE(HasEdge(g, Find(g, NodeKind::kAF, 4), use, EdgeKind::kDD));
  EXPECT_EQ(g.GetString(Target::Node(Find(g, NodeKind::kCall, 11)), PropertyKey::kCallee),
            "puts");
  // An assignment from a call takes the call's kind; a nested read call
  // still marks the node.
  EXPECT_EQ(g.node(Find(g, NodeKind::kRF, 8)).call != frontend::kNoNode, true);
  NodeId nested = Find(g, NodeKind::kAssign, 12);
  EXPECT_EQ(g.GetString(Target::Node(nested), PropertyKey::kApiClass), "read");
}

TEST(BuilderTest, DefUseEdges) {
  PropertyGraph g = BuildFirst(
      "#define LIMIT 4\n"
      "void f(int n) {\n"
      "  int i = 0;\n"
      "  int a[LIMIT];\n"
      "  i += n;\n"
      "  a[i] = sizeof(n);\n"
      "  scanf(\"%d\", &i);\n"
      "  i++;\n"
      "}\n");
  auto defs = [&](int line) {
    for (const GraphNode& n : g.nodes()) {
      if (n.line == line && n.kind != NodeKind::kVar) return NodeDefs(g, n.id);
    }
    return std::set<std::string>{"?"};
  };
  auto uses = [&](int line) {
    for (const GraphNode& n : g.nodes()) {
      if (n.line == line && n.kind != NodeKind::kVar) return NodeUses(g, n.id);
    }
    return std::set<std::string>{"?"};
  };
  EXPECT_EQ(defs(3), (std::set<std::string>{"i"}));
  EXPECT_EQ(defs(4), (std::set<std::string>{"a"}));
  EXPECT_EQ(uses(4), (std::set<std::string>{}));
  EXPECT_EQ(defs(5), (std::set<std::string>{"i"}));
  EXPECT_EQ(uses(5), (std::set<std::string>{"i", "n"}));
  EXPECT_EQ(defs(6), (std::set<std::string>{}));
  EXPECT_EQ(uses(6), (std::set<std::string>{"a", "i"}));
  EXPECT_EQ(uses(7), (std::set<std::string>{}));
  EXPECT_EQ(defs(8), (std::set<std::string>{"i"}));
  EXPECT_EQ(uses(8), (std::set<std::string>{"i"}));
  EXPECT_TRUE(g.VarNode("i").has_value());
  EXPECT_FALSE(g.VarNode("LIMIT").has_value());
  // i has its address taken, so no DD edges are drawn for it.
  for (const GraphEdge& e : g.edges()) {
    if (e.kind == EdgeKind::kDD) {
      EXPECT_NE(g.GetString(Target::Edge(e.id), PropertyKey::kVar), "i");
    }
  }
}

TEST(BuilderTest, OneGraphPerFunction) {
  auto ast = std::make_shared<const Ast>(Parse(
      "int g(int v);\n"
      "int g(int v) { return v; }\n"
      "void h(void) { g(1); }\n"));
  std::vector<PropertyGraph> graphs = BuildAllCpgs(ast);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[0].function_name(), "g");
  EXPECT_EQ(graphs[1].function_name(), "h");
}

TEST(BuilderTest, BreakOutsideLoopIsRejected) {
  auto ast = std::make_shared<const Ast>(Parse("void f(void) { break; }\n"));
  EXPECT_THROW(BuildCpg(ast, ast->functions()[0]), UnsupportedConstruct);
}

TEST(BuilderTest, RebuildIsDeterministic) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    std::string src = testing::RandomProgram(rng, {});
    EXPECT_EQ(BuildFirst(src).Fingerprint(), BuildFirst(src).Fingerprint());
  }
}

TEST(GraphTest, MuSetAndClone) {
  PropertyGraph g = BuildFirst(testing::ReadTestData("incorrect_buffer_size.c"));
  NodeId ad = Find(g, NodeKind::kAD, 6);
  PropertyGraph copy = g.Clone();
  std::uint64_t before = g.Fingerprint();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    NodeId n = static_cast<NodeId>(rng() % copy.nodes().size());
    MuSet(copy, Target::Node(n), PropertyKey::kLen,
          ConstValue::Of(static_cast<std::int64_t>(rng() % 100)));
  }
  EXPECT_EQ(g.Fingerprint(), before);
  EXPECT_EQ(MuGet(g, Target::Node(ad), PropertyKey::kLen), PropertyValue(ConstValue::Of(10)));
  EXPECT_NE(copy.Fingerprint(), before);
  EXPECT_THROW(MuSet(copy, Target::Node(5000), PropertyKey::kLen, std::int64_t{1}),
               UnknownTarget);
}

}  // namespace
}  // namespace viperkit::cpg
