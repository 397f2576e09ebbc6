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

// Property tests for the rule detectors against independent oracles.

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "viperkit/cpg/builder.h"
#include "viperkit/detect/detector.h"
#include "viperkit/frontend/parser.h"

namespace viperkit::detect {
namespace {

using Key = std::tuple<std::string, int, int, int>;  // feature, use, def, src_def

int LineOr0(const FeatureWitness& w, const char* name) {
  auto it = w.lines.find(name);
  return it == w.lines.end() ? 0 : it->second;
}

std::set<Key> OverflowKeys(const std::vector<FeatureWitness>& ws) {
  std::set<Key> out;
  for (const FeatureWitness& w : ws) {
    if (!IsOverflowFeature(w.feature)) continue;
    out.insert({std::string(FeatureName(w.feature)), LineOr0(w, "use_line"),
                LineOr0(w, "def_line"), LineOr0(w, "src_def_line")});
  }
  return out;
}

// Straight-line buffer programs. The model tracks, for every buffer, the
// byte length and line of its latest allocation; that is the only
// definition that can reach a later call.
struct OverflowProgram {
  std::vector<std::string> lines;  // function body, one statement per line
  std::set<Key> expected;
  // Byte offsets of literal constants that may be swapped for `k`.
  std::vector<std::pair<int, std::string>> constants;  // (body line index, literal)
};

OverflowProgram RandomOverflowProgram(std::mt19937_64& rng) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  OverflowProgram p;
  struct Buf {
    std::int64_t len;
    int line;
    bool pointer;
  };
  std::map<std::string, Buf> bufs;
  const int first_line = 2;  // body starts below the signature
  int statements = 3 + pick(8);
  for (int s = 0; s < statements; ++s) {
    int line = first_line + static_cast<int>(p.lines.size());
    int choice = bufs.empty() ? 0 : pick(5);
    if (choice == 0 || (choice == 1 && bufs.size() < 5)) {
      std::string name = "b" + std::to_string(bufs.size());
      std::int64_t n = 1 + pick(24);
      switch (pick(4)) {
        case 0:
          p.lines.push_back("char " + name + "[" + std::to_string(n) + "];");
          bufs[name] = {n, line, false};
          break;
        case 1:
          p.lines.push_back("int " + name + "[" + std::to_string(n) + "];");
          bufs[name] = {4 * n, line, false};
          break;
        default:
          p.lines.push_back("char *" + name + " = (char *)malloc(" + std::to_string(n) + ");");
          bufs[name] = {n, line, true};
          break;
      }
      p.constants.push_back({static_cast<int>(p.lines.size()) - 1, std::to_string(n)});
      continue;
    }
    std::vector<std::string> names;
    for (const auto& [name, b] : bufs) names.push_back(name);
    std::string d = names[pick(static_cast<int>(names.size()))];
    if (choice == 1) {
      std::vector<std::string> pointers;
      for (const auto& [name, b] : bufs) {
        if (b.pointer) pointers.push_back(name);
      }
      if (!pointers.empty()) {
        std::string q = pointers[pick(static_cast<int>(pointers.size()))];
        std::int64_t n = 1 + pick(24);
        p.lines.push_back(q + " = malloc(" + std::to_string(n) + ");");
        bufs[q] = {n, line, true};
        p.constants.push_back({static_cast<int>(p.lines.size()) - 1, std::to_string(n)});
        continue;
      }
    }
    std::string s_name = names[pick(static_cast<int>(names.size()))];
    std::int64_t n = 1 + pick(26);
    std::string count = std::to_string(n);
    if (pick(4) == 0) {
      n *= 4;
      count = std::to_string(n / 4) + " * sizeof(int)";
    }
    static const char* kCalls[] = {"memcpy", "strncpy", "memmove", "memset"};
    std::string callee = kCalls[pick(4)];
    bool has_src = callee != "memset";
    p.lines.push_back(callee + "(" + d + ", " + (has_src ? s_name : "'x'") + ", " + count + ");");
    p.constants.push_back({static_cast<int>(p.lines.size()) - 1, count.substr(0, count.find(' '))});
    const Buf& db = bufs[d];
    const Buf* sb = has_src ? &bufs[s_name] : nullptr;
    // Rule evaluation with OE > BSB > IBS precedence; BO on its own.
    if (n == db.len + 1) {
      p.expected.insert({"OE", line, db.line, 0});
    } else if (db.len < n) {
      if (sb && sb->len == n) {
        p.expected.insert({"BSB", line, db.line, sb->line});
      } else {
        p.expected.insert({"IBS", line, db.line, 0});
      }
    }
    if (sb && sb->len < n) p.expected.insert({"BO", line, 0, sb->line});
  }
  return p;
}

std::string Render(const std::vector<std::string>& body) {
  std::string src = "void f(int k) {\n";
  for (const std::string& l : body) src += "  " + l + "\n";
  return src + "}\n";
}

TEST(OverflowPropertyTest, MatchesPredicateOracle) {
  std::mt19937_64 rng(31337);
  int witnesses = 0;
  for (int i = 0; i < 500; ++i) {
    OverflowProgram p = RandomOverflowProgram(rng);
    std::string src = Render(p.lines);
    DetectionOutcome out = DetectSource("p", src, std::nullopt);
    ASSERT_FALSE(out.error) << *out.error << "\n" << src;
    for (const FeatureWitness& w : out.witnesses) ASSERT_EQ(CheckWitness(w), "") << src;
    ASSERT_EQ(OverflowKeys(out.witnesses), p.expected) << src;
    witnesses += static_cast<int>(p.expected.size());
  }
  EXPECT_GT(witnesses, 200);
}

TEST(OverflowPropertyTest, UnknownConstantsOnlyRemoveWitnesses) {
  std::mt19937_64 rng(4711);
  for (int i = 0; i < 300; ++i) {
    OverflowProgram p = RandomOverflowProgram(rng);
    std::set<Key> before = OverflowKeys(DetectSource("p", Render(p.lines), {}).witnesses);
    auto [index, literal] = p.constants[rng() % p.constants.size()];
    std::string& line = p.lines[index];
    // Replace the last occurrence: the count argument or the size.
    std::size_t at = line.rfind(literal);
    ASSERT_NE(at, std::string::npos);
    line.replace(at, literal.size(), "k");
    std::set<Key> after = OverflowKeys(DetectSource("p", Render(p.lines), {}).witnesses);
    for (const Key& k : after) {
      EXPECT_TRUE(before.count(k)) << Render(p.lines) << std::get<0>(k) << "@" << std::get<1>(k);
    }
  }
}

// Random programs over one heap pointer p mixing frees, uses, reallocations
// and branches.
std::string RandomHeapProgram(std::mt19937_64& rng, int max_statements) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  int budget = max_statements - 1;
  std::function<std::string(int)> stmt = [&](int depth) -> std::string {
    --budget;
    int c = pick(depth >= 2 ? 6 : 8);
    switch (c) {
      case 0:
      case 1:
        return "free(p);";
      case 2:
        return pick(2) ? "x = p[0];" : "p[1] = x;";
      case 3:
        return pick(2) ? "p = malloc(8);" : "p = NULL;";
      case 4:
        return pick(2) ? "g(p);" : "x = x + 1;";
      case 5:
        return "return;";
      default: {
        std::string head = pick(2) ? "if (x > 2) {" : "while (x < 4) {";
        std::string body;
        int n = 1 + pick(3);
        for (int i = 0; i < n && budget > 0; ++i) body += " " + stmt(depth + 1);
        return head + body + " }";
      }
    }
  };
  std::string src = "void f(int x) {\n  char *p = malloc(8);\n";
  while (budget > 0) src += "  " + stmt(0) + "\n";
  return src + "}\n";
}

TEST(DeallocPropertyTest, MatchesPathEnumeration) {
  std::mt19937_64 rng(2718);
  int df = 0, uaf = 0;
  for (int i = 0; i < 400; ++i) {
    std::string src = RandomHeapProgram(rng, 12);
    auto ast = std::make_shared<const frontend::Ast>(frontend::Parse(src));
    cpg::PropertyGraph g = cpg::BuildCpg(ast, ast->functions()[0]);

    // Enumerate simple CFG paths from every free(p). Interior nodes may
    // neither redefine p nor free it.
    std::set<std::tuple<std::string, int, int>> want;
    auto frees = [&](cpg::NodeId n) { return g.node(n).kind == cpg::NodeKind::kFree; };
    for (const cpg::GraphNode& u : g.nodes()) {
      if (!frees(u.id)) continue;
      std::vector<bool> on_path(g.nodes().size(), false);
      std::function<void(cpg::NodeId)> dfs = [&](cpg::NodeId n) {
        for (const cpg::CfgEdge& e : g.CfgSuccessors(n)) {
          cpg::NodeId w = e.to;
          if (frees(w)) {
            want.insert({"DF", u.line, g.node(w).line});
            continue;
          }
          if (cpg::NodeUses(g, w).count("p")) want.insert({"UAF", u.line, g.node(w).line});
          if (on_path[w] || cpg::NodeDefs(g, w).count("p")) continue;
          on_path[w] = true;
          dfs(w);
          on_path[w] = false;
        }
      };
      dfs(u.id);
    }
    std::set<std::tuple<std::string, int, int>> got;
    for (const FeatureWitness& w : DetectDeallocatedUse(g)) {
      ASSERT_EQ(CheckWitness(w), "");
      if (w.feature == FeatureId::kDF) {
        got.insert({"DF", w.lines.at("first_free_line"), w.lines.at("second_free_line")});
        ++df;
      } else {
        got.insert({"UAF", w.lines.at("dealloc_line"), w.lines.at("use_line")});
        ++uaf;
      }
    }
    ASSERT_EQ(got, want) << src;
  }
  EXPECT_GT(df, 50);
  EXPECT_GT(uaf, 50);
}

// Guards are random &&/|| combinations of comparisons between i and small
// constants. The detector must accept exactly the closed pattern set, and
// every accepted guard must really imply i >= 0.
struct Guard {
  std::string text;
  bool accepted;                    // closed pattern set, evaluated on the tree
  std::function<bool(int)> holds;   // semantics
};

Guard RandomGuard(std::mt19937_64& rng, int depth) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  if (depth == 0 || pick(2) == 0) {
    static const char* kOps[] = {"<", "<=", ">", ">=", "==", "!="};
    std::string op = kOps[pick(6)];
    int k = pick(7) - 3;
    bool mirrored = pick(2) == 1;
    std::string ks = std::to_string(k);
    // Normalize to "i op' k".
    std::string norm = op;
    if (mirrored) {
      if (op == "<") norm = ">";
      if (op == "<=") norm = ">=";
      if (op == ">") norm = "<";
      if (op == ">=") norm = "<=";
    }
    bool accepted = (norm == ">=" && k >= 0) || (norm == ">" && k >= -1);
    std::function<bool(int)> holds = [norm, k](int i) {
      if (norm == "<") return i < k;
      if (norm == "<=") return i <= k;
      if (norm == ">") return i > k;
      if (norm == ">=") return i >= k;
      if (norm == "==") return i == k;
      return i != k;
    };
    std::string text = mirrored ? ks + " " + op + " i" : "i " + op + " " + ks;
    return {text, accepted, holds};
  }
  Guard l = RandomGuard(rng, depth - 1);
  Guard r = RandomGuard(rng, depth - 1);
  if (pick(2) == 0) {
    return {"(" + l.text + " && " + r.text + ")", l.accepted || r.accepted,
            [l, r](int i) { return l.holds(i) && r.holds(i); }};
  }
  return {"(" + l.text + " || " + r.text + ")", false,
          [l, r](int i) { return l.holds(i) || r.holds(i); }};
}

TEST(RangeCheckPropertyTest, ClosedGuardSetIsExactAndSound) {
  std::mt19937_64 rng(161803);
  int accepted = 0;
  for (int n = 0; n < 1000; ++n) {
    Guard guard = RandomGuard(rng, 3);
    bool write = rng() % 2 == 0;
    std::string src = "void f(int i) {\n  int b[10];\n  int x;\n  if (" + guard.text + ") {\n" +
                      (write ? "    b[i] = 1;\n" : "    x = b[i];\n") + "  }\n}\n";
    DetectionOutcome out = DetectSource("g", src, std::nullopt);
    ASSERT_FALSE(out.error) << src;
    bool fired = !out.witnesses.empty();
    ASSERT_EQ(fired, !guard.accepted) << src;
    if (fired) {
      ASSERT_EQ(out.witnesses.size(), 1u);
      EXPECT_EQ(out.witnesses[0].feature, write ? FeatureId::kBUW : FeatureId::kBUR);
    } else {
      ++accepted;
      for (int i = -20; i <= 20; ++i) {
        if (guard.holds(i)) {
          ASSERT_GE(i, 0) << src;
        }
      }
    }
  }
  EXPECT_GT(accepted, 100);
}

TEST(DetectorPropertyTest, Deterministic) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    std::string src = RandomHeapProgram(rng, 12);
    DetectionOutcome a = DetectSource("d", src, std::set<int>{3, 4});
    DetectionOutcome b = DetectSource("d", src, std::set<int>{3, 4});
    EXPECT_EQ(a.witnesses, b.witnesses);
  }
}

}  // namespace
}  // namespace viperkit::detect
