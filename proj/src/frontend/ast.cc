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

#include "viperkit/frontend/ast.h"

#include <algorithm>

namespace viperkit::frontend {

std::string_view AstKindName(AstKind kind) {
  switch (kind) {
    case AstKind::kIntLiteral: return "IntLiteral";
    case AstKind::kFloatLiteral: return "FloatLiteral";
    case AstKind::kCharLiteral: return "CharLiteral";
    case AstKind::kStringLiteral: return "StringLiteral";
    case AstKind::kIdentifier: return "Identifier";
    case AstKind::kUnary: return "Unary";
    case AstKind::kPostfix: return "Postfix";
    case AstKind::kBinary: return "Binary";
    case AstKind::kAssign: return "Assign";
    case AstKind::kCall: return "Call";
    case AstKind::kIndex: return "Index";
    case AstKind::kCast: return "Cast";
    case AstKind::kSizeofType: return "SizeofType";
    case AstKind::kSizeofExpr: return "SizeofExpr";
    case AstKind::kInitList: return "InitList";
    case AstKind::kCompound: return "Compound";
    case AstKind::kDeclStmt: return "DeclStmt";
    case AstKind::kExprStmt: return "ExprStmt";
    case AstKind::kIf: return "If";
    case AstKind::kWhile: return "While";
    case AstKind::kFor: return "For";
    case AstKind::kReturn: return "Return";
    case AstKind::kBreak: return "Break";
    case AstKind::kContinue: return "Continue";
    case AstKind::kEmpty: return "Empty";
    case AstKind::kVarDecl: return "VarDecl";
    case AstKind::kFunction: return "Function";
  }
  return "?";
}

bool IsExpression(AstKind kind) { return kind <= AstKind::kInitList; }

bool IsStatement(AstKind kind) {
  return kind >= AstKind::kCompound && kind <= AstKind::kEmpty;
}

bool IsUnsignedBase(std::string_view base) {
  if (base.starts_with("unsigned")) return true;
  static constexpr std::string_view kUnsigned[] = {
      "size_t", "uintptr_t", "uint8_t", "uint16_t", "uint32_t", "uint64_t",
      "_Bool", "wint_t"};
  return std::find(std::begin(kUnsigned), std::end(kUnsigned), base) !=
         std::end(kUnsigned);
}

std::string_view Ast::Text(AstId id) const {
  const Span& s = node(id).span;
  return std::string_view(source_).substr(s.begin.offset, s.size());
}

int Ast::LineCount() const {
  if (source_.empty()) return 0;
  int lines = static_cast<int>(std::count(source_.begin(), source_.end(), '\n'));
  return source_.back() == '\n' ? lines : lines + 1;
}

std::span<const AstId> Ast::FunctionParams(AstId fn) const {
  const auto& kids = node(fn).children;
  return std::span<const AstId>(kids.data(), kids.size() - 1);
}

const AstNode* Ast::FindFunction(std::string_view name) const {
  for (AstId fn : functions_) {
    if (node(fn).text == name) return &node(fn);
  }
  return nullptr;
}

void Ast::Walk(AstId root,
               const std::function<bool(const AstNode&)>& fn) const {
  if (root == kNoNode) return;
  std::vector<AstId> stack{root};
  while (!stack.empty()) {
    AstId id = stack.back();
    stack.pop_back();
    const AstNode& n = node(id);
    if (!fn(n)) continue;
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
      if (*it != kNoNode) stack.push_back(*it);
    }
  }
}

std::vector<AstId> Ast::StatementsOnLine(int line) const {
  std::vector<AstId> out;
  for (AstId fn : functions_) {
    Walk(fn, [&](const AstNode& n) {
      if (n.span.begin.line > line || n.span.end.line < line) return false;
      if (IsStatement(n.kind) && n.span.begin.line == line) out.push_back(n.id);
      return true;
    });
  }
  return out;
}

}  // namespace viperkit::frontend
