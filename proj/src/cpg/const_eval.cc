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

#include "viperkit/cpg/const_eval.h"

#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "viperkit/frontend/parser.h"

namespace viperkit::cpg {

using frontend::Ast;
using frontend::AstId;
using frontend::AstKind;
using frontend::AstNode;
using frontend::kNoNode;

std::string ConstValue::ToString() const {
  return known() ? std::to_string(*value_) : "UNKNOWN";
}

ConstValue operator+(ConstValue a, ConstValue b) {
  std::int64_t r;
  if (!a.known() || !b.known() || __builtin_add_overflow(a.value(), b.value(), &r)) {
    return ConstValue::Unknown();
  }
  return ConstValue::Of(r);
}

ConstValue operator-(ConstValue a, ConstValue b) {
  std::int64_t r;
  if (!a.known() || !b.known() || __builtin_sub_overflow(a.value(), b.value(), &r)) {
    return ConstValue::Unknown();
  }
  return ConstValue::Of(r);
}

ConstValue operator*(ConstValue a, ConstValue b) {
  std::int64_t r;
  if (!a.known() || !b.known() || __builtin_mul_overflow(a.value(), b.value(), &r)) {
    return ConstValue::Unknown();
  }
  return ConstValue::Of(r);
}

ConstValue operator/(ConstValue a, ConstValue b) {
  if (!a.known() || !b.known() || b.value() == 0 ||
      (a.value() == INT64_MIN && b.value() == -1)) {
    return ConstValue::Unknown();
  }
  return ConstValue::Of(a.value() / b.value());
}

ConstValue operator%(ConstValue a, ConstValue b) {
  if (!a.known() || !b.known() || b.value() == 0 ||
      (a.value() == INT64_MIN && b.value() == -1)) {
    return ConstValue::Unknown();
  }
  return ConstValue::Of(a.value() % b.value());
}

ConstValue ConstValue::operator-() const {
  return ConstValue::Of(0) - *this;
}

SizeofModel::SizeofModel()
    : sizes_{{"char", 1},          {"signed char", 1},     {"unsigned char", 1},
             {"_Bool", 1},         {"short", 2},           {"unsigned short", 2},
             {"int", 4},           {"unsigned int", 4},    {"long", 8},
             {"unsigned long", 8}, {"long long", 8},       {"unsigned long long", 8},
             {"float", 4},         {"double", 8},          {"long double", 16},
             {"wchar_t", 4},       {"wint_t", 4},          {"size_t", 8},
             {"uintptr_t", 8},     {"uint8_t", 1},         {"uint16_t", 2},
             {"uint32_t", 4},      {"uint64_t", 8}} {}

ConstValue SizeofModel::BaseSize(std::string_view base) const {
  auto it = sizes_.find(base);
  if (it == sizes_.end()) return ConstValue::Unknown();
  return ConstValue::Of(it->second);
}

std::int64_t SizeofModel::wchar_size() const { return sizes_.at("wchar_t"); }

void SizeofModel::Set(const std::string& type, std::int64_t bytes) {
  if (type == "pointer") {
    pointer_size_ = bytes;
  } else {
    sizes_[type] = bytes;
  }
}

namespace {

AstId StripCasts(const Ast& ast, AstId id) {
  while (id != kNoNode && ast.node(id).kind == AstKind::kCast) {
    id = ast.node(id).children[0];
  }
  return id;
}

class Evaluator {
 public:
  explicit Evaluator(const EvalContext& ctx) : ctx_(ctx) {}

  ConstValue Eval(const Ast& ast, AstId id) {
    if (id == kNoNode) return ConstValue::Unknown();
    const AstNode& n = ast.node(id);
    switch (n.kind) {
      case AstKind::kIntLiteral:
      case AstKind::kCharLiteral:
        return n.value_known ? ConstValue::Of(n.int_value) : ConstValue::Unknown();
      case AstKind::kCast:
        return Eval(ast, n.children[0]);
      case AstKind::kUnary:
        if (n.text == "-") return -Eval(ast, n.children[0]);
        if (n.text == "+") return Eval(ast, n.children[0]);
        return ConstValue::Unknown();
      case AstKind::kBinary: {
        ConstValue a = Eval(ast, n.children[0]);
        ConstValue b = Eval(ast, n.children[1]);
        if (n.text == "+") return a + b;
        if (n.text == "-") return a - b;
        if (n.text == "*") return a * b;
        if (n.text == "/") return a / b;
        if (n.text == "%") return a % b;
        return ConstValue::Unknown();
      }
      case AstKind::kSizeofType:
        return SizeOf(ast, n.type, kNoNode);
      case AstKind::kSizeofExpr:
        return SizeofExpr(ast, n.children[0]);
      case AstKind::kIdentifier:
        return Define(n.text);
      default:
        return ConstValue::Unknown();
    }
  }

  ConstValue SizeOf(const Ast& ast, const frontend::TypeInfo& type, AstId init) {
    const SizeofModel& sizes = *ctx_.sizes;
    ConstValue elem = type.pointer_depth > 0 ? ConstValue::Of(sizes.pointer_size())
                                             : sizes.BaseSize(type.base);
    if (type.dims.empty()) return elem;
    ConstValue total = elem;
    for (std::size_t i = 0; i < type.dims.size(); ++i) {
      AstId dim = type.dims[i];
      ConstValue count;
      if (dim != kNoNode) {
        count = Eval(ast, dim);
      } else if (i == 0 && init != kNoNode) {
        count = InitCount(ast, init);
      } else {
        return ConstValue::Unknown();
      }
      if (count.known() && count.value() < 0) return ConstValue::Unknown();
      total = total * count;
    }
    return total;
  }

 private:
  ConstValue InitCount(const Ast& ast, AstId init) {
    const AstNode& n = ast.node(init);
    if (n.kind == AstKind::kStringLiteral && n.value_known) {
      return ConstValue::Of(static_cast<std::int64_t>(n.string_value.size()) + 1);
    }
    if (n.kind == AstKind::kInitList) {
      return ConstValue::Of(static_cast<std::int64_t>(n.children.size()));
    }
    return ConstValue::Unknown();
  }

  ConstValue SizeofExpr(const Ast& ast, AstId id) {
    id = StripCasts(ast, id);
    const AstNode& n = ast.node(id);
    if (n.kind == AstKind::kStringLiteral && n.value_known) {
      std::int64_t unit = n.wide ? ctx_.sizes->wchar_size() : 1;
      return ConstValue::Of((static_cast<std::int64_t>(n.string_value.size()) + 1) * unit);
    }
    if (n.kind == AstKind::kIdentifier && ctx_.lookup) {
      const AstNode* decl = ctx_.lookup(n.text);
      if (decl != nullptr) return SizeOf(*ctx_.ast, decl->type, decl->init);
    }
    return ConstValue::Unknown();
  }

  ConstValue Define(const std::string& name) {
    const auto& defines = ctx_.ast->defines();
    auto it = defines.find(name);
    if (it == defines.end() || active_.count(name)) return ConstValue::Unknown();
    auto cached = cache_.find(name);
    if (cached != cache_.end()) return cached->second;
    active_.insert(name);
    ConstValue v = ConstValue::Unknown();
    try {
      parsed_.push_back(std::make_unique<Ast>(frontend::ParseExpression(it->second)));
      const Ast& sub = *parsed_.back();
      v = Eval(sub, sub.expression_root());
    } catch (const frontend::SyntaxError&) {
    }
    active_.erase(name);
    cache_[name] = v;
    return v;
  }

  const EvalContext& ctx_;
  std::set<std::string> active_;
  std::map<std::string, ConstValue> cache_;
  std::vector<std::unique_ptr<Ast>> parsed_;
};

}  // namespace

ConstValue EvalConst(const EvalContext& ctx, AstId expr) {
  Evaluator e(ctx);
  return e.Eval(*ctx.ast, expr);
}

ConstValue TypeSize(const EvalContext& ctx, const frontend::TypeInfo& type, AstId init) {
  Evaluator e(ctx);
  return e.SizeOf(*ctx.ast, type, init);
}

}  // namespace viperkit::cpg
