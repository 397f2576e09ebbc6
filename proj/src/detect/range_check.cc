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

#include <deque>

#include "viperkit/cpg/apis.h"
#include "viperkit/cpg/builder.h"
#include "viperkit/detect/detector.h"

namespace viperkit::detect {

using cpg::ConstValue;
using cpg::EdgeId;
using cpg::EdgeKind;
using cpg::EvalContext;
using cpg::GraphNode;
using cpg::NodeId;
using cpg::NodeKind;
using cpg::PropertyGraph;
using cpg::PropertyKey;
using cpg::Target;
using frontend::Ast;
using frontend::AstId;
using frontend::AstKind;
using frontend::AstNode;
using frontend::kNoNode;

namespace {

struct Access {
  std::string buffer;
  std::string index;
  bool write;
  // Left operands of enclosing && whose right side holds the access.
  std::vector<AstId> conjuncts;
};

std::string BufferOf(const Ast& ast, AstId base) {
  base = cpg::StripCasts(ast, base);
  while (base != kNoNode && ast.node(base).kind == AstKind::kIndex) {
    base = cpg::StripCasts(ast, ast.node(base).children[0]);
  }
  return cpg::BaseIdentifier(ast, base);
}

class AccessFinder {
 public:
  explicit AccessFinder(const Ast& ast) : ast_(ast) {}

  std::vector<Access> Find(AstId root) {
    Visit(root, false);
    return std::move(out_);
  }

 private:
  void Visit(AstId id, bool lvalue) {
    if (id == kNoNode) return;
    const AstNode& n = ast_.node(id);
    switch (n.kind) {
      case AstKind::kAssign:
        Visit(n.children[0], true);
        Visit(n.children[1], false);
        return;
      case AstKind::kPostfix:
        Visit(n.children[0], true);
        return;
      case AstKind::kUnary:
        Visit(n.children[0], n.text == "++" || n.text == "--");
        return;
      case AstKind::kIndex: {
        std::string buffer = BufferOf(ast_, n.children[0]);
        std::string index = cpg::BaseIdentifier(ast_, n.children[1]);
        if (!buffer.empty() && !index.empty()) {
          out_.push_back({buffer, index, lvalue, conjuncts_});
        }
        Visit(n.children[0], lvalue);
        Visit(n.children[1], false);
        return;
      }
      case AstKind::kBinary:
        if (n.text == "&&") {
          Visit(n.children[0], false);
          conjuncts_.push_back(n.children[0]);
          Visit(n.children[1], false);
          conjuncts_.pop_back();
          return;
        }
        break;
      case AstKind::kSizeofExpr:
      case AstKind::kSizeofType:
        return;
      default:
        break;
    }
    for (AstId c : n.children) Visit(c, false);
  }

  const Ast& ast_;
  std::vector<AstId> conjuncts_;
  std::vector<Access> out_;
};

bool MentionsIdentifier(const Ast& ast, AstId expr, const std::string& name) {
  bool found = false;
  ast.Walk(expr, [&](const AstNode& n) {
    if (n.kind == AstKind::kIdentifier && n.text == name) found = true;
    return !found && n.kind != AstKind::kSizeofExpr;
  });
  return found;
}

// True when `expr` being true implies idx >= 0 by one of the accepted
// shapes: idx >= K (K >= 0), idx > K (K >= -1), mirrored operand orders,
// and conjunctions containing one of them.
bool Establishes(const EvalContext& ctx, AstId expr, const std::string& idx) {
  const Ast& ast = *ctx.ast;
  if (expr == kNoNode) return false;
  const AstNode& n = ast.node(expr);
  if (n.kind != AstKind::kBinary) return false;
  if (n.text == "&&") {
    return Establishes(ctx, n.children[0], idx) || Establishes(ctx, n.children[1], idx);
  }
  std::string op = n.text;
  AstId var_side = n.children[0];
  AstId const_side = n.children[1];
  if (cpg::BaseIdentifier(ast, var_side) != idx) {
    std::swap(var_side, const_side);
    if (op == "<") op = ">";
    else if (op == "<=") op = ">=";
    else if (op == ">") op = "<";
    else if (op == ">=") op = "<=";
  }
  if (cpg::BaseIdentifier(ast, var_side) != idx) return false;
  ConstValue k = cpg::EvalConst(ctx, const_side);
  if (!k.known()) return false;
  if (op == ">=") return k.value() >= 0;
  if (op == ">") return k.value() >= -1;
  return false;
}

bool IsUnsignedVariable(const EvalContext& ctx, const std::string& name) {
  const AstNode* decl = ctx.lookup ? ctx.lookup(name) : nullptr;
  return decl != nullptr && decl->type.pointer_depth == 0 && decl->type.dims.empty() &&
         frontend::IsUnsignedBase(decl->type.base);
}

}  // namespace

std::vector<FeatureWitness> DetectRangeCheck(const PropertyGraph& g) {
  const Ast& ast = g.ast();
  EvalContext ctx = cpg::MakeEvalContext(g);
  std::vector<FeatureWitness> out;
  for (const GraphNode& v : g.nodes()) {
    if (v.expr == kNoNode) continue;
    for (const Access& a : AccessFinder(ast).Find(v.expr)) {
      if (cpg::IsLibraryName(a.index) || ast.defines().count(a.index)) continue;
      if (IsUnsignedVariable(ctx, a.index)) continue;
      bool guarded = false;
      for (AstId c : a.conjuncts) guarded = guarded || Establishes(ctx, c, a.index);
      std::optional<int> guard_line;
      std::vector<bool> seen(g.nodes().size(), false);
      std::deque<NodeId> work = {v.id};
      seen[v.id] = true;
      while (!work.empty() && !guarded) {
        NodeId n = work.front();
        work.pop_front();
        for (EdgeId e : g.InEdges(n, EdgeKind::kCD)) {
          NodeId c = g.edge(e).src;
          bool on_true = g.GetString(Target::Edge(e), PropertyKey::kBranch) == "true";
          AstId cond = g.node(c).expr;
          if (on_true && cond != kNoNode) {
            if (Establishes(ctx, cond, a.index)) guarded = true;
            if (!guard_line && MentionsIdentifier(ast, cond, a.index)) {
              guard_line = g.node(c).line;
            }
          }
          if (!seen[c]) {
            seen[c] = true;
            work.push_back(c);
          }
        }
      }
      if (guarded) continue;
      FeatureWitness w;
      w.feature = a.write ? FeatureId::kBUW : FeatureId::kBUR;
      w.function = g.function_name();
      w.lines["access_line"] = v.line;
      if (guard_line) w.lines["guard_line"] = *guard_line;
      w.vars["buffer"] = a.buffer;
      w.vars["index"] = a.index;
      for (EdgeId e : g.InEdges(v.id, EdgeKind::kDD)) {
        NodeId src = g.edge(e).src;
        if (g.GetString(Target::Edge(e), PropertyKey::kVar) != a.buffer) continue;
        if (g.node(src).kind != NodeKind::kAD && g.node(src).kind != NodeKind::kAF) continue;
        std::optional<ConstValue> len = g.GetConst(Target::Node(src), PropertyKey::kLen);
        if (len && len->known()) w.constants["LEN_b"] = *len;
        break;
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace viperkit::detect
