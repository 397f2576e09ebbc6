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

#ifndef VIPERKIT_FRONTEND_AST_H_
#define VIPERKIT_FRONTEND_AST_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "viperkit/frontend/token.h"

namespace viperkit::frontend {

using AstId = std::uint32_t;
inline constexpr AstId kNoNode = std::numeric_limits<AstId>::max();

enum class AstKind : std::uint8_t {
  // Expressions.
  kIntLiteral,
  kFloatLiteral,
  kCharLiteral,
  kStringLiteral,
  kIdentifier,
  kUnary,      // text: - + ! & * ++ --
  kPostfix,    // text: ++ --
  kBinary,     // text: + - * / % < <= > >= == != && ||
  kAssign,     // text: = += -= *= /= %=
  kCall,       // text: callee name; children: arguments
  kIndex,      // children: base, index
  kCast,       // type; children: operand
  kSizeofType, // type
  kSizeofExpr, // children: operand
  kInitList,   // children: items
  // Statements.
  kCompound,   // children: statements
  kDeclStmt,   // children: kVarDecl
  kExprStmt,   // children: expression
  kIf,         // children: cond, then, else|kNoNode
  kWhile,      // children: cond, body
  kFor,        // children: init|kNoNode, cond|kNoNode, step|kNoNode, body
  kReturn,     // children: value|kNoNode
  kBreak,
  kContinue,
  kEmpty,
  // Declarations.
  kVarDecl,    // text: name; type; children: array dims then init (see init)
  kFunction,   // text: name; type: return type; children: params, body
};

std::string_view AstKindName(AstKind kind);
bool IsExpression(AstKind kind);
bool IsStatement(AstKind kind);

struct TypeInfo {
  // Canonical base type after typedef resolution, e.g. "char",
  // "unsigned int", "wchar_t", "struct node".
  std::string base;
  int pointer_depth = 0;
  // Array dimension expressions, outermost first; kNoNode for `[]`.
  std::vector<AstId> dims;

  bool IsArray() const { return !dims.empty(); }
  bool IsPointer() const { return pointer_depth > 0 && dims.empty(); }
  bool IsVoid() const { return base == "void" && pointer_depth == 0; }
};

// True for base types that cannot hold a negative value.
bool IsUnsignedBase(std::string_view base);

struct AstNode {
  AstId id = kNoNode;
  AstKind kind = AstKind::kEmpty;
  Span span;
  // Inclusive indices into Ast::tokens() of the first and last significant
  // token covered by this node.
  std::size_t first_token = 0;
  std::size_t last_token = 0;
  std::string text;
  std::vector<AstId> children;
  TypeInfo type;
  AstId init = kNoNode;              // kVarDecl initializer
  std::int64_t int_value = 0;        // integer and character literals
  bool value_known = false;          // int_value fits and was decoded
  std::string string_value;          // decoded string literal contents
  bool wide = false;                 // L"..." and L'.' literals
  std::vector<std::size_t> leading_comments;  // statements only
};

// Immutable parse result for one translation unit. Node ids are indices
// into the node arena and are unique within the unit.
class Ast {
 public:
  Ast() = default;

  const std::string& source() const { return source_; }
  const TokenList& tokens() const { return tokens_; }
  const AstNode& node(AstId id) const { return nodes_.at(id); }
  std::size_t size() const { return nodes_.size(); }

  const std::vector<AstId>& functions() const { return functions_; }
  const std::vector<AstId>& globals() const { return globals_; }
  // Object-like #define constants: name -> replacement text.
  const std::map<std::string, std::string>& defines() const { return defines_; }
  // Root of a standalone expression parse (ParseExpression), else kNoNode.
  AstId expression_root() const { return expression_root_; }

  std::string_view Text(AstId id) const;
  int LineCount() const;

  AstId FunctionBody(AstId fn) const { return node(fn).children.back(); }
  std::span<const AstId> FunctionParams(AstId fn) const;
  const AstNode* FindFunction(std::string_view name) const;

  // Preorder walk; the callback returns false to skip a subtree.
  void Walk(AstId root, const std::function<bool(const AstNode&)>& fn) const;

  // Nodes whose span starts on the given line, in preorder.
  std::vector<AstId> StatementsOnLine(int line) const;

 private:
  friend class Parser;

  std::string source_;
  TokenList tokens_;
  std::vector<AstNode> nodes_;
  std::vector<AstId> functions_;
  std::vector<AstId> globals_;
  std::map<std::string, std::string> defines_;
  AstId expression_root_ = kNoNode;
};

}  // namespace viperkit::frontend

#endif  // VIPERKIT_FRONTEND_AST_H_
