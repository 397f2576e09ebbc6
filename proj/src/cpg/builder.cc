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

#include <algorithm>
#include <map>
#include <utility>

#include "viperkit/cpg/apis.h"

namespace viperkit::cpg {

using frontend::Ast;
using frontend::AstId;
using frontend::AstKind;
using frontend::AstNode;
using frontend::kNoNode;

UnsupportedConstruct::UnsupportedConstruct(AstId node, int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      node_(node),
      line_(line) {}

AstId StripCasts(const Ast& ast, AstId id) {
  while (id != kNoNode && ast.node(id).kind == AstKind::kCast) {
    id = ast.node(id).children[0];
  }
  return id;
}

std::string BaseIdentifier(const Ast& ast, AstId id) {
  id = StripCasts(ast, id);
  if (id == kNoNode || ast.node(id).kind != AstKind::kIdentifier) return {};
  return ast.node(id).text;
}

namespace {

// Def/use facts of one expression.
struct Access {
  std::vector<std::string> defs;
  std::vector<std::string> uses;
  std::set<std::string> address_taken;
};

class AccessCollector {
 public:
  AccessCollector(const Ast& ast, Access* out) : ast_(ast), out_(out) {}

  void Expr(AstId id) {
    if (id == kNoNode) return;
    const AstNode& n = ast_.node(id);
    switch (n.kind) {
      case AstKind::kIdentifier:
        Use(n.text);
        return;
      case AstKind::kAssign: {
        std::string lhs = Identifier(n.children[0]);
        if (!lhs.empty()) {
          if (n.text != "=") Use(lhs);
          Expr(n.children[1]);
          Def(lhs);
        } else {
          Expr(n.children[0]);
          Expr(n.children[1]);
        }
        return;
      }
      case AstKind::kUnary:
        if (n.text == "++" || n.text == "--") {
          IncDec(n.children[0]);
          return;
        }
        if (n.text == "&") {
          std::string name = Identifier(n.children[0]);
          if (!name.empty()) {
            if (Tracked(name)) out_->address_taken.insert(name);
            return;
          }
        }
        Expr(n.children[0]);
        return;
      case AstKind::kPostfix:
        IncDec(n.children[0]);
        return;
      case AstKind::kSizeofExpr:
      case AstKind::kSizeofType:
        return;
      default:
        for (AstId c : n.children) Expr(c);
        return;
    }
  }

  void Def(const std::string& name) {
    if (Tracked(name)) out_->defs.push_back(name);
  }
  void Use(const std::string& name) {
    if (Tracked(name)) out_->uses.push_back(name);
  }

 private:
  bool Tracked(const std::string& name) const {
    return !IsLibraryName(name) && ast_.defines().count(name) == 0;
  }

  std::string Identifier(AstId id) const {
    if (id == kNoNode || ast_.node(id).kind != AstKind::kIdentifier) return {};
    return ast_.node(id).text;
  }

  void IncDec(AstId operand) {
    std::string name = Identifier(operand);
    if (name.empty()) {
      Expr(operand);
      return;
    }
    Use(name);
    Def(name);
  }

  const Ast& ast_;
  Access* out_;
};

NodeKind KindForApi(ApiClass c) {
  switch (c) {
    case ApiClass::kWrite:
      return NodeKind::kWF;
    case ApiClass::kRead:
      return NodeKind::kRF;
    case ApiClass::kCopy:
      return NodeKind::kCF;
    case ApiClass::kAlloc:
      return NodeKind::kAF;
    case ApiClass::kFree:
      return NodeKind::kFree;
    case ApiClass::kNone:
      return NodeKind::kCall;
  }
  return NodeKind::kCall;
}

// The call an expression statement or initializer is "about": the whole
// expression, or the right-hand side of an assignment, with casts stripped.
AstId PrimaryCall(const Ast& ast, AstId expr) {
  AstId e = StripCasts(ast, expr);
  if (e == kNoNode) return kNoNode;
  if (ast.node(e).kind == AstKind::kCall) return e;
  if (ast.node(e).kind == AstKind::kAssign) {
    AstId rhs = StripCasts(ast, ast.node(e).children[1]);
    if (ast.node(rhs).kind == AstKind::kCall) return rhs;
  }
  return kNoNode;
}

struct Pending {
  NodeId from;
  Branch branch;
};

class Builder {
 public:
  Builder(std::shared_ptr<const Ast> ast, AstId function, const SizeofModel& sizes)
      : g_(ast, function, sizes), ast_(*ast) {}

  PropertyGraph Run() {
    const AstNode& fn = ast_.node(g_.function());
    GraphNode entry;
    entry.kind = NodeKind::kEntry;
    entry.line = fn.span.begin.line;
    NodeId entry_id = AddStatementNode(entry, "ENTRY");
    Access params;
    for (AstId p : ast_.FunctionParams(g_.function())) {
      if (!ast_.node(p).text.empty()) {
        AccessCollector(ast_, &params).Def(ast_.node(p).text);
      }
    }
    access_[entry_id] = params;
    GraphNode exit;
    exit.kind = NodeKind::kExit;
    exit.line = fn.span.end.line;
    exit_ = AddStatementNode(exit, "EXIT");
    g_.SetEntryExit(entry_id, exit_);

    std::vector<Pending> out = Lower(ast_.FunctionBody(g_.function()), {{entry_id, Branch::kNone}});
    Connect(out, exit_);

    AddDefUse();
    AddDataDependence();
    AddPostDominanceAndControlDependence();
    return std::move(g_);
  }

 private:
  NodeId AddStatementNode(GraphNode node, const std::string& code) {
    NodeId id = g_.AddNode(std::move(node));
    const GraphNode& n = g_.node(id);
    g_.Set(Target::Node(id), PropertyKey::kType, std::string(NodeKindName(n.kind)));
    g_.Set(Target::Node(id), PropertyKey::kLine, static_cast<std::int64_t>(n.line));
    g_.Set(Target::Node(id), PropertyKey::kCode, code);
    statement_nodes_.push_back(id);
    return id;
  }

  void Connect(const std::vector<Pending>& from, NodeId to) {
    for (const Pending& p : from) g_.AddCfgEdge(p.from, to, p.branch);
  }

  // Call-related properties shared by expression and declaration nodes.
  void SetCallProperties(NodeId id, AstId call) {
    if (call == kNoNode) return;
    const AstNode& c = ast_.node(call);
    Target t = Target::Node(id);
    g_.Set(t, PropertyKey::kCallee, c.text);
    ApiClass cls = ClassifyCallee(c.text);
    if (cls != ApiClass::kNone) {
      g_.Set(t, PropertyKey::kApiClass, std::string(ApiClassName(cls)));
    }
    auto arg = [&c](std::optional<int> i) -> AstId {
      if (!i || static_cast<std::size_t>(*i) >= c.children.size()) return kNoNode;
      return c.children[*i];
    };
    std::string dest = BaseIdentifier(ast_, arg(DestArgIndex(c.text)));
    if (!dest.empty() && !IsLibraryName(dest)) g_.Set(t, PropertyKey::kArgDest, dest);
    if (cls == ApiClass::kWrite || cls == ApiClass::kCopy) {
      AstId src_arg = arg(SrcArgIndex(c.text));
      std::string src = BaseIdentifier(ast_, src_arg);
      if (!src.empty() && !IsLibraryName(src)) g_.Set(t, PropertyKey::kArgSrc, src);
      g_.Set(t, PropertyKey::kArgCount, CountBytes(c, src_arg));
    }
  }

  ConstValue CountBytes(const AstNode& call, AstId src_arg) {
    EvalContext ctx = MakeEvalContext(g_);
    std::optional<int> count_index = CountArgIndex(call.text);
    if (count_index) {
      if (static_cast<std::size_t>(*count_index) >= call.children.size()) {
        return ConstValue::Unknown();
      }
      ConstValue n = EvalConst(ctx, call.children[*count_index]);
      if (CountsWideChars(call.text)) n = n * ConstValue::Of(g_.sizes().wchar_size());
      return n;
    }
    // strcpy: only a string literal source has a static length.
    AstId src = StripCasts(ast_, src_arg);
    if (src != kNoNode && ast_.node(src).kind == AstKind::kStringLiteral &&
        ast_.node(src).value_known) {
      const AstNode& lit = ast_.node(src);
      std::int64_t unit = lit.wide ? g_.sizes().wchar_size() : 1;
      return ConstValue::Of((static_cast<std::int64_t>(lit.string_value.size()) + 1) * unit);
    }
    return ConstValue::Unknown();
  }

  void SetIndexProperty(NodeId id, AstId expr) {
    if (expr == kNoNode) return;
    std::string idx;
    ast_.Walk(expr, [&](const AstNode& n) {
      if (!idx.empty()) return false;
      if (n.kind == AstKind::kIndex) idx = BaseIdentifier(ast_, n.children[1]);
      return idx.empty();
    });
    if (!idx.empty()) g_.Set(Target::Node(id), PropertyKey::kArgIndex, idx);
  }

  void SetSensitiveApi(NodeId id, AstId expr) {
    if (expr == kNoNode || g_.Get(Target::Node(id), PropertyKey::kApiClass)) return;
    ast_.Walk(expr, [&](const AstNode& n) {
      if (n.kind != AstKind::kCall) return true;
      ApiClass cls = ClassifyCallee(n.text);
      if ((cls == ApiClass::kRead || cls == ApiClass::kWrite) &&
          !g_.Get(Target::Node(id), PropertyKey::kApiClass)) {
        g_.Set(Target::Node(id), PropertyKey::kApiClass, std::string(ApiClassName(cls)));
        g_.Set(Target::Node(id), PropertyKey::kCallee, n.text);
      }
      return true;
    });
  }

  NodeId ExpressionNode(AstId stmt, AstId expr, NodeKind forced, bool is_return) {
    const AstNode& anchor = ast_.node(expr != kNoNode ? expr : stmt);
    GraphNode n;
    n.stmt = stmt;
    n.expr = expr;
    n.line = anchor.span.begin.line;
    if (forced == NodeKind::kCond || is_return) {
      n.kind = forced;
    } else {
      n.call = PrimaryCall(ast_, expr);
      n.kind = n.call == kNoNode ? NodeKind::kAssign
                                 : KindForApi(ClassifyCallee(ast_.node(n.call).text));
    }
    std::string code;
    if (forced == NodeKind::kCond) {
      code = expr == kNoNode ? "" : std::string(ast_.Text(expr));
      if (expr == kNoNode) n.line = ast_.node(stmt).span.begin.line;
    } else if (stmt != kNoNode && ast_.node(stmt).kind != AstKind::kFor) {
      code = std::string(ast_.Text(stmt));
    } else {
      code = std::string(ast_.Text(expr));
    }
    NodeId id = AddStatementNode(n, code);
    Access acc;
    AccessCollector(ast_, &acc).Expr(expr);
    access_[id] = acc;
    SetCallProperties(id, g_.node(id).call);
    SetSensitiveApi(id, expr);
    SetIndexProperty(id, expr);
    if (!acc.defs.empty()) g_.Set(Target::Node(id), PropertyKey::kVar, acc.defs.front());
    if (g_.node(id).kind == NodeKind::kAF) {
      g_.Set(Target::Node(id), PropertyKey::kLen, BufferLenBytes(id, g_));
    }
    return id;
  }

  NodeId DeclaratorNode(AstId stmt, AstId decl) {
    const AstNode& d = ast_.node(decl);
    GraphNode n;
    n.stmt = stmt;
    n.decl = decl;
    n.expr = d.init;
    n.line = d.span.begin.line;
    if (d.type.IsArray()) {
      n.kind = NodeKind::kAD;
    } else if (d.init != kNoNode) {
      AstId init = StripCasts(ast_, d.init);
      if (ast_.node(init).kind == AstKind::kCall) {
        n.call = init;
        n.kind = KindForApi(ClassifyCallee(ast_.node(init).text));
      } else {
        n.kind = NodeKind::kDecl;
      }
    } else {
      n.kind = NodeKind::kDecl;
    }
    NodeId id = AddStatementNode(n, std::string(ast_.Text(decl)));
    Access acc;
    AccessCollector collector(ast_, &acc);
    for (AstId dim : d.type.dims) collector.Expr(dim);
    collector.Expr(d.init);
    collector.Def(d.text);
    access_[id] = acc;
    SetCallProperties(id, g_.node(id).call);
    SetSensitiveApi(id, d.init);
    SetIndexProperty(id, d.init);
    g_.Set(Target::Node(id), PropertyKey::kVar, d.text);
    NodeKind kind = g_.node(id).kind;
    if (kind == NodeKind::kAD || kind == NodeKind::kAF) {
      g_.Set(Target::Node(id), PropertyKey::kLen, BufferLenBytes(id, g_));
    }
    return id;
  }

  struct LoopContext {
    std::vector<Pending> breaks;
    std::vector<Pending> continues;
  };

  std::vector<Pending> Lower(AstId id, std::vector<Pending> in) {
    const AstNode& s = ast_.node(id);
    switch (s.kind) {
      case AstKind::kCompound:
        for (AstId c : s.children) in = Lower(c, std::move(in));
        return in;
      case AstKind::kDeclStmt:
        for (AstId decl : s.children) {
          NodeId n = DeclaratorNode(id, decl);
          Connect(in, n);
          in = {{n, Branch::kNone}};
        }
        return in;
      case AstKind::kExprStmt: {
        NodeId n = ExpressionNode(id, s.children[0], NodeKind::kAssign, false);
        Connect(in, n);
        return {{n, Branch::kNone}};
      }
      case AstKind::kReturn: {
        NodeId n = ExpressionNode(id, s.children[0], NodeKind::kRet, true);
        Connect(in, n);
        g_.AddCfgEdge(n, exit_, Branch::kNone);
        return {};
      }
      case AstKind::kIf: {
        NodeId c = ExpressionNode(id, s.children[0], NodeKind::kCond, false);
        Connect(in, c);
        std::vector<Pending> out = Lower(s.children[1], {{c, Branch::kTrue}});
        if (s.children[2] != kNoNode) {
          std::vector<Pending> e = Lower(s.children[2], {{c, Branch::kFalse}});
          out.insert(out.end(), e.begin(), e.end());
        } else {
          out.push_back({c, Branch::kFalse});
        }
        return out;
      }
      case AstKind::kWhile: {
        NodeId c = ExpressionNode(id, s.children[0], NodeKind::kCond, false);
        Connect(in, c);
        loops_.emplace_back();
        std::vector<Pending> body = Lower(s.children[1], {{c, Branch::kTrue}});
        Connect(body, c);
        Connect(loops_.back().continues, c);
        std::vector<Pending> out = {{c, Branch::kFalse}};
        out.insert(out.end(), loops_.back().breaks.begin(), loops_.back().breaks.end());
        loops_.pop_back();
        return out;
      }
      case AstKind::kFor: {
        AstId init = s.children[0];
        if (init != kNoNode) {
          if (ast_.node(init).kind == AstKind::kDeclStmt) {
            in = Lower(init, std::move(in));
          } else {
            NodeId n = ExpressionNode(id, init, NodeKind::kAssign, false);
            Connect(in, n);
            in = {{n, Branch::kNone}};
          }
        }
        NodeId c = ExpressionNode(id, s.children[1], NodeKind::kCond, false);
        Connect(in, c);
        loops_.emplace_back();
        std::vector<Pending> body = Lower(s.children[3], {{c, Branch::kTrue}});
        NodeId target = c;
        if (s.children[2] != kNoNode) {
          target = ExpressionNode(id, s.children[2], NodeKind::kAssign, false);
          g_.AddCfgEdge(target, c, Branch::kNone);
        }
        Connect(body, target);
        Connect(loops_.back().continues, target);
        std::vector<Pending> out = {{c, Branch::kFalse}};
        out.insert(out.end(), loops_.back().breaks.begin(), loops_.back().breaks.end());
        loops_.pop_back();
        return out;
      }
      case AstKind::kBreak:
        if (loops_.empty()) throw UnsupportedConstruct(id, s.span.begin.line, "break outside a loop");
        loops_.back().breaks.insert(loops_.back().breaks.end(), in.begin(), in.end());
        return {};
      case AstKind::kContinue:
        if (loops_.empty()) {
          throw UnsupportedConstruct(id, s.span.begin.line, "continue outside a loop");
        }
        loops_.back().continues.insert(loops_.back().continues.end(), in.begin(), in.end());
        return {};
      case AstKind::kEmpty:
        return in;
      default:
        throw UnsupportedConstruct(id, s.span.begin.line,
                                   "unexpected " + std::string(AstKindName(s.kind)) +
                                       " in statement position");
    }
  }

  void AddDefUse() {
    std::map<std::string, NodeId> var_nodes;
    auto var_node = [&](const std::string& name) {
      auto it = var_nodes.find(name);
      if (it != var_nodes.end()) return it->second;
      GraphNode v;
      v.kind = NodeKind::kVar;
      v.var = name;
      NodeId id = g_.AddNode(v);
      g_.Set(Target::Node(id), PropertyKey::kType, std::string("VAR"));
      g_.Set(Target::Node(id), PropertyKey::kCode, name);
      g_.Set(Target::Node(id), PropertyKey::kVar, name);
      var_nodes[name] = id;
      return id;
    };
    for (NodeId n : statement_nodes_) {
      const Access& acc = access_[n];
      for (const std::string& d : std::set<std::string>(acc.defs.begin(), acc.defs.end())) {
        EdgeId e = g_.AddEdge(n, var_node(d), EdgeKind::kDef);
        g_.Set(Target::Edge(e), PropertyKey::kVar, d);
      }
      for (const std::string& u : std::set<std::string>(acc.uses.begin(), acc.uses.end())) {
        EdgeId e = g_.AddEdge(n, var_node(u), EdgeKind::kUse);
        g_.Set(Target::Edge(e), PropertyKey::kVar, u);
      }
      address_taken_.insert(acc.address_taken.begin(), acc.address_taken.end());
    }
  }

  void AddDataDependence() {
    using Def = std::pair<NodeId, std::string>;
    std::size_t count = g_.nodes().size();
    std::vector<std::set<std::string>> defs(count);
    std::vector<std::set<std::string>> uses(count);
    for (NodeId n : statement_nodes_) {
      defs[n] = std::set<std::string>(access_[n].defs.begin(), access_[n].defs.end());
      uses[n] = std::set<std::string>(access_[n].uses.begin(), access_[n].uses.end());
    }
    std::vector<std::set<Def>> in(count), out(count);
    bool changed = true;
    while (changed) {
      changed = false;
      for (NodeId n : statement_nodes_) {
        std::set<Def> new_in;
        for (const CfgEdge& p : g_.CfgPredecessors(n)) {
          new_in.insert(out[p.to].begin(), out[p.to].end());
        }
        std::set<Def> new_out;
        for (const Def& d : new_in) {
          if (!defs[n].count(d.second)) new_out.insert(d);
        }
        for (const std::string& v : defs[n]) new_out.insert({n, v});
        if (new_in != in[n] || new_out != out[n]) {
          in[n] = std::move(new_in);
          out[n] = std::move(new_out);
          changed = true;
        }
      }
    }
    for (NodeId v : statement_nodes_) {
      std::vector<Def> reaching(in[v].begin(), in[v].end());
      std::sort(reaching.begin(), reaching.end(), [](const Def& a, const Def& b) {
        return std::tie(a.second, a.first) < std::tie(b.second, b.first);
      });
      for (const Def& d : reaching) {
        if (!uses[v].count(d.second) || address_taken_.count(d.second)) continue;
        EdgeId e = g_.AddEdge(d.first, v, EdgeKind::kDD);
        g_.Set(Target::Edge(e), PropertyKey::kVar, d.second);
      }
    }
  }

  void AddPostDominanceAndControlDependence() {
    std::size_t count = g_.nodes().size();
    // pdom[n][m] == true iff m post-dominates n. Nodes that cannot reach
    // EXIT keep the full set and receive no ipdom.
    std::vector<std::vector<bool>> pdom(count, std::vector<bool>(count, false));
    std::vector<bool> is_stmt(count, false);
    for (NodeId n : statement_nodes_) is_stmt[n] = true;
    for (NodeId n : statement_nodes_) {
      if (n == exit_) {
        pdom[n][n] = true;
      } else {
        for (NodeId m : statement_nodes_) pdom[n][m] = true;
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = statement_nodes_.rbegin(); it != statement_nodes_.rend(); ++it) {
        NodeId n = *it;
        if (n == exit_ || g_.CfgSuccessors(n).empty()) continue;
        std::vector<bool> meet(count, true);
        for (const CfgEdge& s : g_.CfgSuccessors(n)) {
          for (std::size_t m = 0; m < count; ++m) meet[m] = meet[m] && pdom[s.to][m];
        }
        for (std::size_t m = 0; m < count; ++m) meet[m] = meet[m] && is_stmt[m];
        meet[n] = true;
        if (meet != pdom[n]) {
          pdom[n] = std::move(meet);
          changed = true;
        }
      }
    }
    auto size = [&](NodeId n) { return std::count(pdom[n].begin(), pdom[n].end(), true); };
    std::vector<NodeId> ipdom(count, kNoGraphNode);
    for (NodeId n : statement_nodes_) {
      if (n == exit_ || !pdom[n][exit_]) continue;
      // The strict post-dominator with the largest own set is the nearest.
      NodeId best = kNoGraphNode;
      long best_size = -1;
      for (NodeId m : statement_nodes_) {
        if (m == n || !pdom[n][m]) continue;
        long s = size(m);
        if (s > best_size) {
          best_size = s;
          best = m;
        }
      }
      ipdom[n] = best;
    }
    for (NodeId n : statement_nodes_) {
      if (ipdom[n] != kNoGraphNode) g_.AddEdge(n, ipdom[n], EdgeKind::kPD);
    }
    std::set<std::tuple<NodeId, NodeId, Branch>> seen;
    for (NodeId a : statement_nodes_) {
      for (const CfgEdge& e : g_.CfgSuccessors(a)) {
        if (pdom[a][e.to] && e.to != a) continue;
        NodeId t = e.to;
        while (t != kNoGraphNode && t != ipdom[a]) {
          if (seen.insert({a, t, e.branch}).second) {
            EdgeId id = g_.AddEdge(a, t, EdgeKind::kCD);
            g_.Set(Target::Edge(id), PropertyKey::kBranch, std::string(BranchName(e.branch)));
          }
          t = ipdom[t];
        }
      }
    }
  }

  PropertyGraph g_;
  const Ast& ast_;
  NodeId exit_ = kNoGraphNode;
  std::vector<NodeId> statement_nodes_;
  std::map<NodeId, Access> access_;
  std::set<std::string> address_taken_;
  std::vector<LoopContext> loops_;
};

}  // namespace

PropertyGraph BuildCpg(std::shared_ptr<const Ast> ast, AstId function,
                       const SizeofModel& sizes) {
  return Builder(std::move(ast), function, sizes).Run();
}

std::vector<PropertyGraph> BuildAllCpgs(std::shared_ptr<const Ast> ast,
                                        const SizeofModel& sizes) {
  std::vector<PropertyGraph> out;
  for (AstId fn : ast->functions()) out.push_back(BuildCpg(ast, fn, sizes));
  return out;
}

EvalContext MakeEvalContext(const PropertyGraph& g) {
  EvalContext ctx;
  ctx.ast = &g.ast();
  ctx.sizes = &g.sizes();
  auto scope = std::make_shared<std::map<std::string, const AstNode*, std::less<>>>();
  const Ast& ast = g.ast();
  for (AstId decl_stmt : ast.globals()) {
    for (AstId d : ast.node(decl_stmt).children) (*scope)[ast.node(d).text] = &ast.node(d);
  }
  if (g.function() != kNoNode) {
    for (AstId p : ast.FunctionParams(g.function())) (*scope)[ast.node(p).text] = &ast.node(p);
    ast.Walk(ast.FunctionBody(g.function()), [&](const AstNode& n) {
      if (n.kind == AstKind::kVarDecl) (*scope)[n.text] = &n;
      return true;
    });
  }
  ctx.lookup = [scope](std::string_view name) -> const AstNode* {
    auto it = scope->find(name);
    return it == scope->end() ? nullptr : it->second;
  };
  return ctx;
}

ConstValue BufferLenBytes(NodeId id, const PropertyGraph& g) {
  const GraphNode& n = g.node(id);
  const Ast& ast = g.ast();
  EvalContext ctx = MakeEvalContext(g);
  if (n.kind == NodeKind::kAD && n.decl != kNoNode) {
    const AstNode& d = ast.node(n.decl);
    return TypeSize(ctx, d.type, d.init);
  }
  if (n.kind == NodeKind::kAF && n.call != kNoNode) {
    const AstNode& call = ast.node(n.call);
    if ((call.text == "malloc" || call.text == "alloca") && call.children.size() == 1) {
      return EvalConst(ctx, call.children[0]);
    }
    if (call.text == "calloc" && call.children.size() == 2) {
      return EvalConst(ctx, call.children[0]) * EvalConst(ctx, call.children[1]);
    }
  }
  return ConstValue::Unknown();
}

std::set<std::string> NodeDefs(const PropertyGraph& g, NodeId node) {
  std::set<std::string> out;
  for (EdgeId e : g.OutEdges(node, EdgeKind::kDef)) out.insert(g.node(g.edge(e).dst).var);
  return out;
}

std::set<std::string> NodeUses(const PropertyGraph& g, NodeId node) {
  std::set<std::string> out;
  for (EdgeId e : g.OutEdges(node, EdgeKind::kUse)) out.insert(g.node(g.edge(e).dst).var);
  return out;
}

std::vector<NodeId> ImmediatePostDominators(const PropertyGraph& g) {
  std::vector<NodeId> out(g.nodes().size(), kNoGraphNode);
  for (const GraphEdge& e : g.edges()) {
    if (e.kind == EdgeKind::kPD) out[e.src] = e.dst;
  }
  return out;
}

}  // namespace viperkit::cpg
