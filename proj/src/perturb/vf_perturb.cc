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

#include "viperkit/perturb/vf_perturb.h"

#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <utility>

#include "viperkit/cpg/apis.h"
#include "viperkit/cpg/builder.h"
#include "viperkit/frontend/edits.h"
#include "viperkit/frontend/parser.h"

namespace viperkit::perturb {

using cpg::ConstValue;
using cpg::EdgeId;
using cpg::EdgeKind;
using cpg::GraphNode;
using cpg::NodeId;
using cpg::NodeKind;
using cpg::PropertyGraph;
using cpg::PropertyKey;
using cpg::Target;
using detect::FeatureId;
using detect::FeatureWitness;
using frontend::Ast;
using frontend::AstId;
using frontend::AstKind;
using frontend::AstNode;
using frontend::EditScript;
using frontend::kNoNode;

namespace {

constexpr std::string_view kNopStatement = "printf(\"\");";

struct Draft {
  VariantKind kind;
  std::string recipe;
  EditScript script;
};

// Where a buffer's length is spelled: the span of one count expression and
// the bytes each unit of it stands for.
struct LengthSite {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::int64_t unit = 1;
  std::int64_t count = 0;
};

std::int64_t CeilDiv(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

class Recipes {
 public:
  Recipes(const std::string& source, const cpg::SizeofModel& sizes)
      : ast_(std::make_shared<const Ast>(frontend::Parse(source))),
        graphs_(cpg::BuildAllCpgs(ast_, sizes)),
        wchar_(sizes.wchar_size()) {
    parent_.assign(ast_->size(), kNoNode);
    for (AstId fn : ast_->functions()) {
      ast_->Walk(fn, [&](const AstNode& n) {
        for (AstId c : n.children) {
          if (c != kNoNode) parent_[c] = n.id;
        }
        if (n.init != kNoNode) parent_[n.init] = n.id;
        return true;
      });
    }
  }

  // One entry per recipe of w's feature, in recipe order. A recipe that
  // cannot be applied yields a Draft-less entry with the reason.
  std::vector<std::pair<std::optional<Draft>, std::string>> Apply(const FeatureWitness& w) {
    const PropertyGraph* g = GraphFor(w.function);
    std::vector<std::pair<std::string, std::function<Draft()>>> recipes;
    if (g == nullptr) {
      return {{std::nullopt, "all: no function " + w.function}};
    }
    switch (w.feature) {
      case FeatureId::kIBS:
      case FeatureId::kBSB:
      case FeatureId::kBO:
        AddLengthCountRecipes(*g, w, &recipes);
        break;
      case FeatureId::kOE:
        AddOffByOneRecipes(*g, w, &recipes);
        break;
      case FeatureId::kDF:
        AddDoubleFreeRecipes(*g, w, &recipes);
        break;
      case FeatureId::kUAF:
        AddUseAfterFreeRecipes(*g, w, &recipes);
        break;
      case FeatureId::kBUW:
      case FeatureId::kBUR:
        AddRangeCheckRecipes(*g, w, &recipes);
        break;
      case FeatureId::kRA:
      case FeatureId::kWA:
        AddApiRecipes(*g, w, &recipes);
        break;
    }
    std::vector<std::pair<std::optional<Draft>, std::string>> out;
    for (auto& [name, make] : recipes) {
      try {
        out.emplace_back(make(), "");
      } catch (const UneditableWitness& e) {
        out.emplace_back(std::nullopt, name + ": " + e.what());
      }
    }
    return out;
  }

 private:
  using RecipeList = std::vector<std::pair<std::string, std::function<Draft()>>>;

  const PropertyGraph* GraphFor(const std::string& name) const {
    for (const PropertyGraph& g : graphs_) {
      if (g.function_name() == name) return &g;
    }
    return nullptr;
  }

  static NodeId FindNode(const PropertyGraph& g, int line,
                         const std::function<bool(const GraphNode&)>& pred,
                         const std::string& what) {
    for (const GraphNode& n : g.nodes()) {
      if (n.line == line && pred(n)) return n.id;
    }
    throw UneditableWitness("no " + what + " on line " + std::to_string(line));
  }

  // The overflow call: a WF/CF node on use_line whose dest (or, for BO,
  // source) argument is the witness buffer.
  NodeId OverflowCall(const PropertyGraph& g, const FeatureWitness& w) const {
    bool by_src = w.feature == FeatureId::kBO;
    PropertyKey key = by_src ? PropertyKey::kArgSrc : PropertyKey::kArgDest;
    const std::string& var = w.vars.at(by_src ? "src" : "dest");
    return FindNode(
        g, w.lines.at("use_line"),
        [&](const GraphNode& n) {
          return (n.kind == NodeKind::kWF || n.kind == NodeKind::kCF) &&
                 g.GetString(Target::Node(n.id), key) == var;
        },
        "call on " + var);
  }

  // The allocation of `var` on `line` that reaches `use` through DD.
  NodeId ReachingAllocation(const PropertyGraph& g, NodeId use, const std::string& var,
                            int line) const {
    for (EdgeId e : g.InEdges(use, EdgeKind::kDD)) {
      NodeId src = g.edge(e).src;
      const GraphNode& n = g.node(src);
      if ((n.kind == NodeKind::kAD || n.kind == NodeKind::kAF) && n.line == line &&
          g.GetString(Target::Edge(e), PropertyKey::kVar) == var) {
        return src;
      }
    }
    throw UneditableWitness("no allocation of " + var + " on line " + std::to_string(line));
  }

  LengthSite AllocationSite(const PropertyGraph& g, NodeId id) const {
    const GraphNode& n = g.node(id);
    cpg::EvalContext ctx = cpg::MakeEvalContext(g);
    ConstValue len = cpg::BufferLenBytes(id, g);
    if (!len.known()) throw UneditableWitness("allocation length unknown");
    auto site_of = [&](AstId expr, std::int64_t unit) {
      const AstNode& e = ast_->node(expr);
      ConstValue count = cpg::EvalConst(ctx, expr);
      if (!count.known() || unit <= 0) throw UneditableWitness("allocation count unknown");
      return LengthSite{e.span.begin.offset, e.span.end.offset, unit, count.value()};
    };
    if (n.kind == NodeKind::kAD) {
      const AstNode& d = ast_->node(n.decl);
      if (d.type.dims.size() != 1 || d.type.dims[0] == kNoNode) {
        throw UneditableWitness("array " + d.text + " has no single explicit dimension");
      }
      ConstValue count = cpg::EvalConst(ctx, d.type.dims[0]);
      if (!count.known() || count.value() <= 0 || len.value() % count.value() != 0) {
        throw UneditableWitness("array dimension of " + d.text + " not constant");
      }
      return site_of(d.type.dims[0], len.value() / count.value());
    }
    const AstNode& call = ast_->node(n.call);
    if (call.text == "calloc") {
      ConstValue size = cpg::EvalConst(ctx, call.children[1]);
      if (!size.known()) throw UneditableWitness("calloc element size unknown");
      return site_of(call.children[0], size.value());
    }
    return site_of(call.children[0], 1);
  }

  LengthSite CountSite(const PropertyGraph& g, NodeId id) const {
    const GraphNode& n = g.node(id);
    const AstNode& call = ast_->node(n.call);
    std::optional<int> index = cpg::CountArgIndex(call.text);
    if (!index || static_cast<std::size_t>(*index) >= call.children.size()) {
      throw UneditableWitness(call.text + " has no count argument");
    }
    AstId arg = call.children[*index];
    ConstValue count = cpg::EvalConst(cpg::MakeEvalContext(g), arg);
    if (!count.known()) throw UneditableWitness("count unknown");
    const AstNode& a = ast_->node(arg);
    std::int64_t unit = cpg::CountsWideChars(call.text) ? wchar_ : 1;
    return LengthSite{a.span.begin.offset, a.span.end.offset, unit, count.value()};
  }

  static void SetCount(EditScript* s, const LengthSite& site, std::int64_t count) {
    if (count < 0) throw UneditableWitness("count would be negative");
    s->ReplaceSpan(site.begin, site.end, std::to_string(count));
  }

  static std::string Bytes(std::int64_t count, std::int64_t unit) {
    return std::to_string(count * unit);
  }

  void AddLengthCountRecipes(const PropertyGraph& g, const FeatureWitness& w,
                             RecipeList* out) const {
    bool bo = w.feature == FeatureId::kBO;
    bool bsb = w.feature == FeatureId::kBSB;
    std::string len_name = bo ? "LEN_s" : "LEN_d";
    auto sites = [this, &g, w, bo]() {
      NodeId call = OverflowCall(g, w);
      NodeId buf = bo ? ReachingAllocation(g, call, w.vars.at("src"), w.lines.at("src_def_line"))
                      : ReachingAllocation(g, call, w.vars.at("dest"), w.lines.at("def_line"));
      return std::make_tuple(call, AllocationSite(g, buf), CountSite(g, call));
    };
    out->emplace_back("FPP1", [=, this, &g]() {
      auto [call, len, n] = sites();
      if (len.count <= 1) throw UneditableWitness(len_name + " cannot shrink below one element");
      Draft d{VariantKind::kFPP,
              "FPP1 " + len_name + " " + Bytes(len.count, len.unit) + " -> " +
                  Bytes(len.count - 1, len.unit),
              {}};
      SetCount(&d.script, len, len.count - 1);
      return d;
    });
    out->emplace_back("FPP2", [=, this, &g]() {
      auto [call, len, n] = sites();
      Draft d{VariantKind::kFPP, "", {}};
      std::int64_t delta = n.unit;
      if (bsb) {
        // n must keep matching LEN_s; grow both by a common multiple.
        NodeId src = ReachingAllocation(g, call, w.vars.at("src"), w.lines.at("src_def_line"));
        LengthSite s = AllocationSite(g, src);
        delta = std::lcm(n.unit, s.unit);
        SetCount(&d.script, s, s.count + delta / s.unit);
        d.recipe = "FPP2 n and LEN_s +" + std::to_string(delta) + " (" +
                   Bytes(n.count, n.unit) + " -> " + Bytes(n.count + delta / n.unit, n.unit) + ")";
      } else {
        d.recipe = "FPP2 n " + Bytes(n.count, n.unit) + " -> " + Bytes(n.count + 1, n.unit);
      }
      SetCount(&d.script, n, n.count + delta / n.unit);
      return d;
    });
    out->emplace_back("FEP1", [=, this]() {
      auto [call, len, n] = sites();
      std::int64_t bytes = n.count * n.unit;
      std::int64_t count = CeilDiv(bytes, len.unit);
      Draft d{VariantKind::kFEP,
              "FEP1 " + len_name + " <- n (" + Bytes(len.count, len.unit) + " -> " +
                  Bytes(count, len.unit) + ")",
              {}};
      SetCount(&d.script, len, count);
      return d;
    });
    out->emplace_back("FEP2", [=, this]() {
      auto [call, len, n] = sites();
      std::int64_t count = len.count * len.unit / n.unit;
      Draft d{VariantKind::kFEP,
              "FEP2 n <- " + len_name + " (" + Bytes(n.count, n.unit) + " -> " +
                  Bytes(count, n.unit) + ")",
              {}};
      SetCount(&d.script, n, count);
      return d;
    });
  }

  void AddOffByOneRecipes(const PropertyGraph& g, const FeatureWitness& w,
                          RecipeList* out) const {
    auto sites = [this, &g, w]() {
      NodeId call = OverflowCall(g, w);
      NodeId buf = ReachingAllocation(g, call, w.vars.at("dest"), w.lines.at("def_line"));
      return std::make_pair(AllocationSite(g, buf), CountSite(g, call));
    };
    out->emplace_back("FPP1", [=]() {
      auto [len, n] = sites();
      std::int64_t delta = std::lcm(len.unit, n.unit);
      Draft d{VariantKind::kFPP, "FPP1 LEN_d and n +" + std::to_string(delta), {}};
      SetCount(&d.script, len, len.count + delta / len.unit);
      SetCount(&d.script, n, n.count + delta / n.unit);
      return d;
    });
    out->emplace_back("FEP1", [=]() {
      auto [len, n] = sites();
      std::int64_t count = len.count * len.unit / n.unit;
      Draft d{VariantKind::kFEP,
              "FEP1 n <- LEN_d (" + Bytes(n.count, n.unit) + " -> " + Bytes(count, n.unit) + ")",
              {}};
      SetCount(&d.script, n, count);
      return d;
    });
    out->emplace_back("FEP2", [=]() {
      auto [len, n] = sites();
      std::int64_t count = CeilDiv(n.count * n.unit, len.unit);
      Draft d{VariantKind::kFEP,
              "FEP2 LEN_d <- n (" + Bytes(len.count, len.unit) + " -> " +
                  Bytes(count, len.unit) + ")",
              {}};
      SetCount(&d.script, len, count);
      return d;
    });
  }

  // Inserting a line above `stmt` only lands on the witness path when the
  // statement starts its line inside a block.
  void InsertBeforeStatement(AstId stmt, const std::string& text, EditScript* s) const {
    if (stmt == kNoNode) throw UneditableWitness("no enclosing statement");
    const AstNode& n = ast_->node(stmt);
    AstId parent = parent_[stmt];
    if (parent == kNoNode || ast_->node(parent).kind != AstKind::kCompound) {
      throw UneditableWitness("statement on line " + std::to_string(n.span.begin.line) +
                              " is not directly inside a block");
    }
    const frontend::TokenList& toks = ast_->tokens();
    for (std::size_t i = n.first_token; i-- > 0;) {
      if (toks[i].IsTrivia()) continue;
      if (toks[i].span.end.line == n.span.begin.line) {
        throw UneditableWitness("statement on line " + std::to_string(n.span.begin.line) +
                                " shares its line");
      }
      break;
    }
    s->InsertBefore(n.span.begin.line, text);
  }

  // The first free(b) on `line`, or the last one when `last` is set (two
  // frees sharing a line are told apart by order).
  NodeId FreeNode(const PropertyGraph& g, int line, const std::string& b,
                  bool last = false) const {
    std::optional<NodeId> found;
    for (const GraphNode& n : g.nodes()) {
      if (n.line == line && n.kind == NodeKind::kFree &&
          g.GetString(Target::Node(n.id), PropertyKey::kArgDest) == b) {
        if (!found || last) found = n.id;
        if (!last) break;
      }
    }
    if (!found) throw UneditableWitness("no free(" + b + ") on line " + std::to_string(line));
    return *found;
  }

  void ReplaceFreeArgument(const PropertyGraph& g, NodeId free_node, EditScript* s) const {
    const AstNode& call = ast_->node(g.node(free_node).call);
    const AstNode& arg = ast_->node(call.children.at(0));
    s->ReplaceSpan(arg.span.begin.offset, arg.span.end.offset, "NULL");
  }

  void AddDoubleFreeRecipes(const PropertyGraph& g, const FeatureWitness& w,
                            RecipeList* out) const {
    const std::string b = w.vars.at("buffer");
    int first_line = w.lines.at("first_free_line");
    int second_line = w.lines.at("second_free_line");
    out->emplace_back("FPP1", [=, this, &g]() {
      NodeId second = FreeNode(g, second_line, b, /*last=*/true);
      Draft d{VariantKind::kFPP, "FPP1 printf(\"\"); before line " + std::to_string(second_line),
              {}};
      InsertBeforeStatement(g.node(second).stmt, std::string(kNopStatement), &d.script);
      return d;
    });
    out->emplace_back("FEP1", [=, this, &g]() {
      NodeId first = FreeNode(g, first_line, b);
      NodeId second = FreeNode(g, second_line, b, /*last=*/true);
      std::string rhs;
      for (EdgeId e : g.InEdges(first, EdgeKind::kDD)) {
        const GraphNode& src = g.node(g.edge(e).src);
        if (src.kind != NodeKind::kAF || src.call == kNoNode) continue;
        if (g.GetString(Target::Edge(e), PropertyKey::kVar) != b) continue;
        if (src.decl != kNoNode && ast_->node(src.decl).init != kNoNode) {
          rhs = ast_->Text(ast_->node(src.decl).init);
        } else if (src.expr != kNoNode && ast_->node(src.expr).kind == AstKind::kAssign) {
          rhs = ast_->Text(ast_->node(src.expr).children[1]);
        }
        if (!rhs.empty()) break;
      }
      if (rhs.empty()) throw UneditableWitness("no allocation of " + b + " reaches the first free");
      Draft d{VariantKind::kFEP, "FEP1 reallocate " + b + " before line " +
                                     std::to_string(second_line), {}};
      InsertBeforeStatement(g.node(second).stmt, b + " = " + rhs + ";", &d.script);
      return d;
    });
    out->emplace_back("FEP2", [=, this, &g]() {
      NodeId second = FreeNode(g, second_line, b, /*last=*/true);
      Draft d{VariantKind::kFEP, "FEP2 free(" + b + ") -> free(NULL) on line " +
                                     std::to_string(second_line), {}};
      ReplaceFreeArgument(g, second, &d.script);
      return d;
    });
  }

  void AddUseAfterFreeRecipes(const PropertyGraph& g, const FeatureWitness& w,
                              RecipeList* out) const {
    const std::string b = w.vars.at("buffer");
    int free_line = w.lines.at("dealloc_line");
    int use_line = w.lines.at("use_line");
    auto use_node = [this, &g, b, use_line]() {
      return FindNode(
          g, use_line,
          [&](const GraphNode& n) {
            return n.kind != NodeKind::kFree && cpg::NodeUses(g, n.id).count(b) > 0;
          },
          "use of " + b);
    };
    out->emplace_back("FPP1", [=, this, &g]() {
      Draft d{VariantKind::kFPP, "FPP1 printf(\"\"); before line " + std::to_string(use_line), {}};
      InsertBeforeStatement(g.node(use_node()).stmt, std::string(kNopStatement), &d.script);
      return d;
    });
    out->emplace_back("FEP1", [=, this, &g]() {
      Draft d{VariantKind::kFEP, "FEP1 free(" + b + ") -> free(NULL) on line " +
                                     std::to_string(free_line), {}};
      ReplaceFreeArgument(g, FreeNode(g, free_line, b), &d.script);
      return d;
    });
    out->emplace_back("FEP2", [=, this, &g]() {
      AstId stmt = g.node(use_node()).stmt;
      if (stmt == kNoNode || ast_->node(stmt).kind != AstKind::kExprStmt) {
        throw UneditableWitness("use on line " + std::to_string(use_line) +
                                " is not an expression statement");
      }
      const AstNode& s = ast_->node(stmt);
      Draft d{VariantKind::kFEP, "FEP2 drop the use on line " + std::to_string(use_line), {}};
      d.script.ReplaceSpan(s.span.begin.offset, s.span.end.offset, std::string(kNopStatement));
      return d;
    });
  }

  bool Mentions(AstId root, const std::string& name) const {
    bool found = false;
    ast_->Walk(root, [&](const AstNode& n) {
      if (n.kind == AstKind::kIdentifier && n.text == name) found = true;
      return !found;
    });
    return found;
  }

  // Conjoins `guard` onto the witness's guard condition, or wraps the
  // access in `if (guard)` when there is none.
  EditScript AddGuard(const PropertyGraph& g, const FeatureWitness& w,
                      const std::string& guard) const {
    const std::string& buffer = w.vars.at("buffer");
    const std::string& idx = w.vars.at("index");
    EditScript s;
    if (auto it = w.lines.find("guard_line"); it != w.lines.end()) {
      NodeId cond = FindNode(
          g, it->second,
          [&](const GraphNode& n) {
            return n.kind == NodeKind::kCond && n.expr != kNoNode && Mentions(n.expr, idx);
          },
          "condition on " + idx);
      const AstNode& c = ast_->node(g.node(cond).expr);
      std::string text(ast_->Text(c.id));
      bool wrap = (c.kind == AstKind::kBinary && c.text == "||") || c.kind == AstKind::kAssign;
      if (wrap) text = "(" + text + ")";
      s.ReplaceSpan(c.span.begin.offset, c.span.end.offset, guard + " && " + text);
      return s;
    }
    NodeId access = FindNode(
        g, w.lines.at("access_line"),
        [&](const GraphNode& n) {
          AstId root = n.expr != kNoNode ? n.expr : n.decl;
          if (root == kNoNode) return false;
          bool hit = false;
          ast_->Walk(root, [&](const AstNode& e) {
            if (e.kind == AstKind::kIndex && cpg::BaseIdentifier(*ast_, e.children[0]) == buffer &&
                cpg::BaseIdentifier(*ast_, e.children[1]) == idx) {
              hit = true;
            }
            return !hit;
          });
          return hit;
        },
        buffer + "[" + idx + "]");
    AstId stmt = g.node(access).stmt;
    if (stmt == kNoNode || ast_->node(stmt).kind != AstKind::kExprStmt) {
      throw UneditableWitness("unguarded access on line " + std::to_string(w.lines.at("access_line")) +
                              " is not an expression statement");
    }
    const AstNode& st = ast_->node(stmt);
    std::string text = "if (" + guard + ") " + std::string(ast_->Text(stmt));
    AstId parent = parent_[stmt];
    if (parent == kNoNode || ast_->node(parent).kind != AstKind::kCompound) {
      text = "{ " + text + " }";
    }
    s.ReplaceSpan(st.span.begin.offset, st.span.end.offset, text);
    return s;
  }

  void AddRangeCheckRecipes(const PropertyGraph& g, const FeatureWitness& w,
                            RecipeList* out) const {
    const std::string idx = w.vars.at("index");
    std::int64_t bound = 2;
    if (auto it = w.constants.find("LEN_b"); it != w.constants.end() && it->second.known() &&
                                             it->second.value() > 0) {
      bound = 2 * it->second.value();
    }
    std::string loose = idx + " > -" + std::to_string(bound);
    out->emplace_back("FPP1", [=, this, &g]() {
      return Draft{VariantKind::kFPP, "FPP1 guard " + loose, AddGuard(g, w, loose)};
    });
    out->emplace_back("FEP1", [=, this, &g]() {
      std::string guard = idx + " >= 0";
      return Draft{VariantKind::kFEP, "FEP1 guard " + guard, AddGuard(g, w, guard)};
    });
    out->emplace_back("FEP2", [=, this, &g]() {
      std::string guard = idx + " > -1";
      return Draft{VariantKind::kFEP, "FEP2 guard " + guard, AddGuard(g, w, guard)};
    });
  }

  // The callee token of the sensitive call named in the witness.
  const AstNode& SensitiveCall(const PropertyGraph& g, const FeatureWitness& w) const {
    const std::string& callee = w.vars.at("callee");
    const AstNode* found = nullptr;
    FindNode(
        g, w.lines.at("call_line"),
        [&](const GraphNode& n) {
          for (AstId root : {n.expr, n.decl, n.call}) {
            if (root == kNoNode) continue;
            ast_->Walk(root, [&](const AstNode& e) {
              if (e.kind == AstKind::kCall && e.text == callee) found = &e;
              return found == nullptr;
            });
            if (found != nullptr) return true;
          }
          return false;
        },
        "call to " + callee);
    return *found;
  }

  void RenameCallee(const AstNode& call, const std::string& name, EditScript* s) const {
    const frontend::Token& t = ast_->tokens().at(call.first_token);
    if (t.text != call.text) throw UneditableWitness("callee token not found");
    s->ReplaceSpan(t.span.begin.offset, t.span.end.offset, name);
  }

  void AddApiRecipes(const PropertyGraph& g, const FeatureWitness& w, RecipeList* out) const {
    bool write = w.feature == FeatureId::kWA;
    if (write) {
      out->emplace_back("FPP1", [=, this, &g]() {
        const AstNode& call = SensitiveCall(g, w);
        Draft d{VariantKind::kFPP, "", {}};
        static const std::map<std::string, std::string> kSwap = {{"memcpy", "strncpy"},
                                                                 {"strncpy", "memcpy"}};
        if (auto it = kSwap.find(call.text); it != kSwap.end()) {
          RenameCallee(call, it->second, &d.script);
          d.recipe = "FPP1 " + call.text + " -> " + it->second;
          return d;
        }
        if (call.text != "memset" && call.text != "wmemset") {
          throw UneditableWitness("no write API with the same arguments as " + call.text);
        }
        if (call.children.size() != 3) throw UneditableWitness("malformed " + call.text);
        ConstValue n = cpg::EvalConst(cpg::MakeEvalContext(g), call.children[2]);
        if (!n.known()) throw UneditableWitness(call.text + " count unknown");
        const AstNode& arg = ast_->node(call.children[2]);
        std::int64_t count;
        std::string to;
        if (call.text == "memset") {
          if (n.value() % wchar_ != 0) {
            throw UneditableWitness("memset count is not whole wide characters");
          }
          to = "wmemset";
          count = n.value() / wchar_;
        } else {
          to = "memset";
          count = n.value() * wchar_;
        }
        RenameCallee(call, to, &d.script);
        d.script.ReplaceSpan(arg.span.begin.offset, arg.span.end.offset, std::to_string(count));
        d.recipe = "FPP1 " + call.text + " -> " + to;
        return d;
      });
    }
    std::string stub = write ? "wr_stub" : "rd_stub";
    out->emplace_back("FEP1", [=, this, &g]() {
      const AstNode& call = SensitiveCall(g, w);
      Draft d{VariantKind::kFEP, "FEP1 " + call.text + " -> " + stub, {}};
      RenameCallee(call, stub, &d.script);
      return d;
    });
  }

  std::shared_ptr<const Ast> ast_;
  std::vector<PropertyGraph> graphs_;
  std::vector<AstId> parent_;
  std::int64_t wchar_;
};

}  // namespace

VfPerturbationResult GenerateVfPerturbations(const detect::AnnotatedSample& sample,
                                             const std::string& source,
                                             const cpg::SizeofModel& sizes) {
  VfPerturbationResult result;
  if (sample.witnesses.empty()) return result;
  std::optional<Recipes> recipes;
  try {
    recipes.emplace(source, sizes);
  } catch (const std::exception& e) {
    result.skipped.push_back(sample.sample_id + ": " + e.what());
    return result;
  }
  std::map<std::pair<FeatureId, VariantKind>, int> counters;
  for (const FeatureWitness& w : sample.witnesses) {
    for (auto& [draft, reason] : recipes->Apply(w)) {
      std::string where = sample.sample_id + " " + std::string(detect::FeatureName(w.feature)) +
                          "@" + std::to_string(w.AnchorLine());
      if (!draft) {
        result.skipped.push_back(where + " " + reason);
        continue;
      }
      frontend::EditResult edited;
      try {
        edited = frontend::ApplyEditsWithLineMap(source, draft->script);
      } catch (const std::exception& e) {
        result.skipped.push_back(where + " " + draft->recipe + ": " + e.what());
        continue;
      }
      PerturbedVariant v;
      int k = ++counters[{w.feature, draft->kind}];
      v.variant_id = MakeVariantId(sample.sample_id, w.feature, draft->kind, k);
      v.parent = sample.sample_id;
      v.kind = draft->kind;
      v.feature = w.feature;
      v.source = std::move(edited.text);
      v.line_map = std::move(edited.line_map);
      v.expected_label =
          draft->kind == VariantKind::kFPP ? sample.label : frontend::Label::kNonVulnerable;
      v.recipe = draft->recipe;
      if (sample.vulnerable_lines) {
        v.vulnerable_lines = MapLines(*sample.vulnerable_lines, v.line_map);
        // The lines of an eliminated feature are no longer vulnerable.
        if (draft->kind == VariantKind::kFEP) {
          std::set<int> gone;
          for (const auto& [key, line] : w.lines) gone.insert(line);
          for (int l : MapLines(gone, v.line_map)) v.vulnerable_lines->erase(l);
        }
      }
      v.target = w;
      result.variants.push_back(std::move(v));
    }
  }
  return result;
}

}  // namespace viperkit::perturb
