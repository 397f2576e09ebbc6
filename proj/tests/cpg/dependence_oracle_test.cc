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

// Property tests: the dependence edges of random functions are compared
// against brute-force definitions, and concrete executions are checked
// against the CFG and DD edges.

#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "testing/oracles.h"
#include "testing/random_programs.h"
#include "viperkit/cpg/builder.h"
#include "viperkit/frontend/parser.h"

namespace viperkit::cpg {
namespace {

using frontend::Ast;
using frontend::AstId;
using frontend::AstKind;
using frontend::AstNode;
using frontend::kNoNode;

constexpr int kPrograms = 300;

TEST(DependenceOracleTest, MatchesBruteForce) {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < kPrograms; ++i) {
    std::string src = testing::RandomProgram(rng, {});
    auto ast = std::make_shared<const Ast>(frontend::Parse(src));
    PropertyGraph g = BuildCpg(ast, ast->functions()[0]);
    EXPECT_EQ(testing::CheckDependenceEdges(g), "") << src;
  }
}

// Concrete interpreter for the random-program language.
class Interpreter {
 public:
  Interpreter(const PropertyGraph& g, std::int64_t a, std::int64_t b)
      : g_(g), ast_(g.ast()) {
    env_["a"] = a;
    env_["b"] = b;
    for (const GraphNode& n : g.nodes()) {
      if (n.kind == NodeKind::kVar || n.kind == NodeKind::kEntry || n.kind == NodeKind::kExit) {
        continue;
      }
      if (n.decl != kNoNode) {
        by_decl_[n.decl] = n.id;
      } else if (n.kind == NodeKind::kCond) {
        cond_[n.stmt] = n.id;
      } else {
        by_expr_[{n.stmt, n.expr}] = n.id;
      }
    }
  }

  void Run() {
    Visit(g_.entry(), Branch::kNone, {}, {"a", "b"});
    try {
      Exec(ast_.FunctionBody(g_.function()));
      Visit(g_.exit(), Branch::kNone, {}, {});
    } catch (const Returned&) {
      Visit(g_.exit(), Branch::kNone, {}, {});
    } catch (const OutOfSteps&) {
    }
  }

  const std::vector<std::string>& problems() const { return problems_; }
  int steps() const { return steps_; }

 private:
  struct Returned {};
  struct OutOfSteps {};
  struct Broke {};
  struct Continued {};

  void Visit(NodeId n, Branch taken, const std::set<std::string>& reads,
             const std::set<std::string>& writes) {
    if (++steps_ > 400) throw OutOfSteps();
    if (prev_ != kNoGraphNode) {
      bool ok = false;
      for (const CfgEdge& e : g_.CfgSuccessors(prev_)) {
        ok |= e.to == n && e.branch == pending_branch_;
      }
      if (!ok) problems_.push_back("missing CFG edge " + Name(prev_) + " -> " + Name(n));
    }
    for (const std::string& v : reads) {
      auto it = last_def_.find(v);
      if (it == last_def_.end()) continue;
      bool ok = false;
      for (EdgeId e : g_.OutEdges(it->second, EdgeKind::kDD)) {
        ok |= g_.edge(e).dst == n &&
              g_.GetString(Target::Edge(e), PropertyKey::kVar) == v;
      }
      if (!ok) problems_.push_back("missing DD " + Name(it->second) + " -> " + Name(n) + " " + v);
    }
    for (const std::string& v : writes) last_def_[v] = n;
    prev_ = n;
    pending_branch_ = taken;
  }

  std::string Name(NodeId n) const {
    return std::string(NodeKindName(g_.node(n).kind)) + "@" + std::to_string(g_.node(n).line);
  }

  std::int64_t Eval(AstId id, std::set<std::string>& reads, std::set<std::string>& writes) {
    const AstNode& n = ast_.node(id);
    switch (n.kind) {
      case AstKind::kIntLiteral:
        return n.int_value;
      case AstKind::kIdentifier:
        reads.insert(n.text);
        return env_[n.text];
      case AstKind::kCall:
        for (AstId c : n.children) Eval(c, reads, writes);
        return 0;
      case AstKind::kAssign: {
        std::int64_t v = Eval(n.children[1], reads, writes);
        const std::string& name = ast_.node(n.children[0]).text;
        env_[name] = v;
        writes.insert(name);
        return v;
      }
      case AstKind::kPostfix: {
        const std::string& name = ast_.node(n.children[0]).text;
        reads.insert(name);
        writes.insert(name);
        return env_[name]++;
      }
      case AstKind::kBinary: {
        std::int64_t l = Eval(n.children[0], reads, writes);
        if (n.text == "&&" && !l) return 0;
        if (n.text == "||" && l) return 1;
        std::int64_t r = Eval(n.children[1], reads, writes);
        auto wrap = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };
        auto ul = static_cast<std::uint64_t>(l);
        auto ur = static_cast<std::uint64_t>(r);
        if (n.text == "+") return wrap(ul + ur);
        if (n.text == "-") return wrap(ul - ur);
        if (n.text == "*") return wrap(ul * ur);
        if (n.text == "<") return l < r;
        if (n.text == "<=") return l <= r;
        if (n.text == ">") return l > r;
        if (n.text == ">=") return l >= r;
        if (n.text == "==") return l == r;
        if (n.text == "!=") return l != r;
        if (n.text == "&&" || n.text == "||") return r != 0;
        ADD_FAILURE() << "operator " << n.text;
        return 0;
      }
      default:
        ADD_FAILURE() << "expression " << frontend::AstKindName(n.kind);
        return 0;
    }
  }

  void Simple(NodeId node, AstId expr) {
    std::set<std::string> reads, writes;
    if (expr != kNoNode) Eval(expr, reads, writes);
    Visit(node, Branch::kNone, reads, writes);
  }

  bool Condition(AstId stmt, AstId expr) {
    std::set<std::string> reads, writes;
    bool v = expr == kNoNode || Eval(expr, reads, writes) != 0;
    Visit(cond_.at(stmt), v ? Branch::kTrue : Branch::kFalse, reads, writes);
    return v;
  }

  void Exec(AstId id) {
    const AstNode& s = ast_.node(id);
    switch (s.kind) {
      case AstKind::kCompound:
        for (AstId c : s.children) Exec(c);
        return;
      case AstKind::kDeclStmt:
        for (AstId d : s.children) {
          std::set<std::string> reads, writes = {ast_.node(d).text};
          std::int64_t v = 0;
          if (ast_.node(d).init != kNoNode) v = Eval(ast_.node(d).init, reads, writes);
          env_[ast_.node(d).text] = v;
          Visit(by_decl_.at(d), Branch::kNone, reads, writes);
        }
        return;
      case AstKind::kExprStmt:
        Simple(by_expr_.at({id, s.children[0]}), s.children[0]);
        return;
      case AstKind::kReturn:
        Simple(by_expr_.at({id, s.children[0]}), s.children[0]);
        throw Returned();
      case AstKind::kIf:
        if (Condition(id, s.children[0])) {
          Exec(s.children[1]);
        } else if (s.children[2] != kNoNode) {
          Exec(s.children[2]);
        }
        return;
      case AstKind::kWhile:
        while (Condition(id, s.children[0])) {
          try {
            Exec(s.children[1]);
          } catch (const Broke&) {
            break;
          } catch (const Continued&) {
          }
        }
        return;
      case AstKind::kFor:
        Simple(by_expr_.at({id, s.children[0]}), s.children[0]);
        while (Condition(id, s.children[1])) {
          try {
            Exec(s.children[3]);
          } catch (const Broke&) {
            break;
          } catch (const Continued&) {
          }
          Simple(by_expr_.at({id, s.children[2]}), s.children[2]);
        }
        return;
      case AstKind::kBreak:
        throw Broke();
      case AstKind::kContinue:
        throw Continued();
      default:
        ADD_FAILURE() << "statement " << frontend::AstKindName(s.kind);
    }
  }

  const PropertyGraph& g_;
  const Ast& ast_;
  std::map<std::string, std::int64_t> env_;
  std::map<AstId, NodeId> by_decl_;
  std::map<AstId, NodeId> cond_;
  std::map<std::pair<AstId, AstId>, NodeId> by_expr_;
  std::map<std::string, NodeId> last_def_;
  NodeId prev_ = kNoGraphNode;
  Branch pending_branch_ = Branch::kNone;
  int steps_ = 0;
  std::vector<std::string> problems_;
};

TEST(DependenceOracleTest, ExecutionsFollowCfgAndDataDependence) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> arg(-3, 12);
  int total_steps = 0;
  for (int i = 0; i < kPrograms; ++i) {
    std::string src = testing::RandomProgram(rng, {});
    auto ast = std::make_shared<const Ast>(frontend::Parse(src));
    PropertyGraph g = BuildCpg(ast, ast->functions()[0]);
    for (int run = 0; run < 3; ++run) {
      Interpreter interp(g, arg(rng), arg(rng));
      interp.Run();
      total_steps += interp.steps();
      ASSERT_TRUE(interp.problems().empty()) << interp.problems()[0] << "\n" << src;
    }
  }
  EXPECT_GT(total_steps, kPrograms * 3 * 5);
}

}  // namespace
}  // namespace viperkit::cpg
