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

#include "viperkit/frontend/parser.h"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <set>
#include <utility>

#include "viperkit/frontend/lexer.h"

namespace viperkit::frontend {

SyntaxError::SyntaxError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line),
      message_(message) {}

namespace {

// Type names provided by the standard headers that the subset strips.
const std::map<std::string, std::string>& LibraryTypedefs() {
  static const std::map<std::string, std::string> kTypes = {
      {"size_t", "size_t"},       {"ssize_t", "long"},
      {"wchar_t", "wchar_t"},     {"wint_t", "wint_t"},
      {"FILE", "FILE"},           {"ptrdiff_t", "long"},
      {"intptr_t", "long"},       {"uintptr_t", "uintptr_t"},
      {"int8_t", "signed char"},  {"uint8_t", "uint8_t"},
      {"int16_t", "short"},       {"uint16_t", "uint16_t"},
      {"int32_t", "int"},         {"uint32_t", "uint32_t"},
      {"int64_t", "long"},        {"uint64_t", "uint64_t"},
      {"time_t", "long"},         {"off_t", "long"},
      {"bool", "_Bool"},
  };
  return kTypes;
}

bool IsStorageOrQualifier(std::string_view w) {
  return w == "const" || w == "volatile" || w == "static" || w == "extern" ||
         w == "register" || w == "auto" || w == "inline" || w == "restrict";
}

bool IsTypeKeyword(std::string_view w) {
  return w == "void" || w == "char" || w == "short" || w == "int" ||
         w == "long" || w == "float" || w == "double" || w == "signed" ||
         w == "unsigned" || w == "_Bool";
}

bool ParseIntLiteral(std::string_view text, std::int64_t* value) {
  while (!text.empty() && (text.back() == 'u' || text.back() == 'U' ||
                           text.back() == 'l' || text.back() == 'L')) {
    text.remove_suffix(1);
  }
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  } else if (text.size() > 1 && text[0] == '0') {
    base = 8;
    text.remove_prefix(1);
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
  if (ec != std::errc() || ptr != text.data() + text.size()) return false;
  if (v > static_cast<std::uint64_t>(INT64_MAX)) return false;
  *value = static_cast<std::int64_t>(v);
  return true;
}

}  // namespace

class Parser {
 public:
  explicit Parser(std::string_view source) {
    ast_.source_ = std::string(source);
    ast_.tokens_ = Lex(ast_.source_);
    for (std::size_t i = 0; i < ast_.tokens_.size(); ++i) {
      if (!ast_.tokens_[i].IsTrivia()) sig_.push_back(i);
    }
    for (const auto& [name, base] : LibraryTypedefs()) {
      typedefs_[name] = TypeInfo{base, 0, {}};
    }
  }

  Ast ParseUnit() {
    ProcessDirectives();
    while (Cur().kind != TokenKind::kEof) ParseExternalDeclaration();
    return std::move(ast_);
  }

  Ast ParseStandaloneExpression() {
    AstId root = ParseAssignment();
    if (Cur().kind != TokenKind::kEof) Fail("unexpected trailing tokens in expression");
    ast_.expression_root_ = root;
    return std::move(ast_);
  }

 private:
  // --- token cursor -------------------------------------------------------

  const Token& Cur() const { return ast_.tokens_[sig_[p_]]; }
  const Token& Ahead(std::size_t n) const {
    std::size_t i = std::min(p_ + n, sig_.size() - 1);
    return ast_.tokens_[sig_[i]];
  }
  bool AtPunct(std::string_view p) const { return Cur().IsPunct(p); }
  bool AtKeyword(std::string_view k) const { return Cur().IsKeyword(k); }
  void Next() {
    if (p_ + 1 < sig_.size()) ++p_;
  }
  bool Accept(std::string_view punct) {
    if (!AtPunct(punct)) return false;
    Next();
    return true;
  }
  void Expect(std::string_view punct) {
    if (!Accept(punct)) {
      Fail("expected '" + std::string(punct) + "' before " + Describe(Cur()));
    }
  }
  [[noreturn]] void Fail(const std::string& message) const {
    throw SyntaxError(Cur().span.begin.line, message);
  }
  static std::string Describe(const Token& t) {
    if (t.kind == TokenKind::kEof) return "end of input";
    return "'" + t.text + "'";
  }

  AstId Finish(AstNode node, std::size_t start) {
    std::size_t last = p_ > start ? p_ - 1 : start;
    node.first_token = sig_[start];
    node.last_token = sig_[last];
    node.span = Span{ast_.tokens_[node.first_token].span.begin,
                     ast_.tokens_[node.last_token].span.end};
    node.id = static_cast<AstId>(ast_.nodes_.size());
    ast_.nodes_.push_back(std::move(node));
    return ast_.nodes_.back().id;
  }

  static AstNode Make(AstKind kind, std::string text = {},
                      std::vector<AstId> children = {}) {
    AstNode n;
    n.kind = kind;
    n.text = std::move(text);
    n.children = std::move(children);
    return n;
  }

  // --- preprocessor -------------------------------------------------------

  void ProcessDirectives() {
    for (const Token& t : ast_.tokens_) {
      if (t.kind != TokenKind::kPreprocessor) continue;
      std::string_view body = std::string_view(t.text).substr(1);
      auto skip_ws = [&body] {
        while (!body.empty() && (body.front() == ' ' || body.front() == '\t'))
          body.remove_prefix(1);
      };
      skip_ws();
      std::size_t n = 0;
      while (n < body.size() && (std::isalnum(static_cast<unsigned char>(body[n])) || body[n] == '_'))
        ++n;
      std::string_view directive = body.substr(0, n);
      body.remove_prefix(n);
      int line = t.span.begin.line;
      if (directive == "include") continue;
      if (directive != "define") {
        throw SyntaxError(line, "unsupported preprocessor directive #" +
                                    std::string(directive));
      }
      skip_ws();
      std::size_t m = 0;
      while (m < body.size() && (std::isalnum(static_cast<unsigned char>(body[m])) || body[m] == '_'))
        ++m;
      if (m == 0) throw SyntaxError(line, "malformed #define");
      std::string name(body.substr(0, m));
      body.remove_prefix(m);
      if (!body.empty() && body.front() == '(') {
        throw SyntaxError(line, "function-like macro '" + name + "' is not supported");
      }
      std::string replacement;
      for (const std::string& tok : SignificantTokens(body)) {
        if (tok == "\\") continue;
        if (!replacement.empty()) replacement += ' ';
        replacement += tok;
      }
      ast_.defines_[name] = replacement;
    }
  }

  // --- declarations -------------------------------------------------------

  bool IsTypeStart(const Token& t) const {
    if (t.kind == TokenKind::kKeyword) {
      return IsTypeKeyword(t.text) || IsStorageOrQualifier(t.text) ||
             t.text == "struct" || t.text == "union" || t.text == "enum" ||
             t.text == "typedef";
    }
    return t.kind == TokenKind::kIdentifier && typedefs_.count(t.text) > 0;
  }

  struct Specifiers {
    TypeInfo type;
    bool is_typedef = false;
  };

  Specifiers ParseSpecifiers() {
    Specifiers spec;
    int longs = 0;
    bool is_unsigned = false, is_signed = false, saw_short = false;
    std::string core;  // void/char/int/float/double/_Bool
    std::string named; // typedef or struct name
    bool any = false;
    while (true) {
      const Token& t = Cur();
      if (t.kind == TokenKind::kKeyword) {
        if (t.text == "typedef") {
          spec.is_typedef = true;
        } else if (IsStorageOrQualifier(t.text)) {
        } else if (t.text == "long") {
          ++longs;
        } else if (t.text == "short") {
          saw_short = true;
        } else if (t.text == "unsigned") {
          is_unsigned = true;
        } else if (t.text == "signed") {
          is_signed = true;
        } else if (IsTypeKeyword(t.text)) {
          if (!core.empty() && !(core == "int" || t.text == "int")) {
            Fail("conflicting type specifiers");
          }
          if (core.empty() || core == "int") core = t.text;
        } else if (t.text == "struct") {
          Next();
          if (Cur().kind != TokenKind::kIdentifier) Fail("anonymous structs are not supported");
          named = "struct " + Cur().text;
          if (Ahead(1).IsPunct("{")) Fail("struct definitions are not supported");
        } else if (t.text == "union" || t.text == "enum") {
          Fail(t.text + " types are not supported");
        } else {
          break;
        }
        any = true;
        Next();
        continue;
      }
      if (t.kind == TokenKind::kIdentifier && named.empty() && core.empty() &&
          longs == 0 && !saw_short && !is_unsigned && !is_signed &&
          typedefs_.count(t.text) > 0) {
        const TypeInfo& aliased = typedefs_.at(t.text);
        spec.type = aliased;
        named = aliased.base;
        any = true;
        Next();
        continue;
      }
      break;
    }
    if (!any) Fail("expected a type specifier before " + Describe(Cur()));
    if (!named.empty()) {
      spec.type.base = named;
      return spec;
    }
    std::string base;
    if (core == "char") {
      base = is_unsigned ? "unsigned char" : is_signed ? "signed char" : "char";
    } else if (core == "void" || core == "float" || core == "_Bool") {
      base = core;
    } else if (core == "double") {
      base = longs > 0 ? "long double" : "double";
    } else {
      if (saw_short) base = "short";
      else if (longs >= 2) base = "long long";
      else if (longs == 1) base = "long";
      else base = "int";
      if (is_unsigned) base = "unsigned " + base;
    }
    spec.type.base = base;
    return spec;
  }

  // Parses pointer stars, the name (if present) and array suffixes.
  TypeInfo ParseDeclarator(const TypeInfo& base, bool allow_abstract,
                           std::size_t* name_pos) {
    TypeInfo type = base;
    while (AtPunct("*")) {
      ++type.pointer_depth;
      Next();
      while (Cur().kind == TokenKind::kKeyword && IsStorageOrQualifier(Cur().text)) Next();
    }
    if (AtPunct("(")) Fail("function pointers are not supported");
    *name_pos = SIZE_MAX;
    if (Cur().kind == TokenKind::kIdentifier) {
      *name_pos = p_;
      Next();
    } else if (!allow_abstract) {
      Fail("expected an identifier before " + Describe(Cur()));
    }
    std::vector<AstId> dims;
    while (Accept("[")) {
      if (AtPunct("]")) {
        dims.push_back(kNoNode);
      } else {
        dims.push_back(ParseAssignment());
      }
      Expect("]");
    }
    // Array dims written after the name come before inherited typedef dims.
    dims.insert(dims.end(), type.dims.begin(), type.dims.end());
    type.dims = std::move(dims);
    return type;
  }

  AstId ParseInitializer() {
    if (!AtPunct("{")) return ParseAssignment();
    std::size_t start = p_;
    Next();
    std::vector<AstId> items;
    while (!AtPunct("}")) {
      items.push_back(ParseInitializer());
      if (!Accept(",")) break;
    }
    Expect("}");
    return Finish(Make(AstKind::kInitList, {}, std::move(items)), start);
  }

  // Parses `spec declarator [= init] (, declarator [= init])* ;` after the
  // specifiers; returns kVarDecl ids. Registers typedef names.
  std::vector<AstId> ParseInitDeclarators(const Specifiers& spec,
                                          std::size_t spec_start,
                                          TypeInfo first_type,
                                          std::size_t first_name_pos) {
    std::vector<AstId> decls;
    bool first = true;
    while (true) {
      std::size_t decl_start = first ? spec_start : p_;
      TypeInfo type;
      std::size_t name_pos;
      if (first) {
        type = std::move(first_type);
        name_pos = first_name_pos;
      } else {
        type = ParseDeclarator(spec.type, false, &name_pos);
      }
      first = false;
      std::string name = ast_.tokens_[sig_[name_pos]].text;
      if (spec.is_typedef) {
        typedefs_[name] = type;
      } else {
        AstNode n = Make(AstKind::kVarDecl, name);
        n.type = type;
        for (AstId d : type.dims) {
          if (d != kNoNode) n.children.push_back(d);
        }
        if (Accept("=")) {
          n.init = ParseInitializer();
          n.children.push_back(n.init);
        }
        decls.push_back(Finish(std::move(n), decl_start));
      }
      if (!Accept(",")) break;
    }
    Expect(";");
    return decls;
  }

  void ParseExternalDeclaration() {
    std::size_t start = p_;
    if (AtPunct(";")) {
      Next();
      return;
    }
    Specifiers spec = ParseSpecifiers();
    if (Accept(";")) return;
    std::size_t name_pos;
    TypeInfo type = ParseDeclarator(spec.type, false, &name_pos);
    if (AtPunct("(") && !spec.is_typedef) {
      ParseFunction(spec, type, start, name_pos);
      return;
    }
    std::vector<AstId> decls = ParseInitDeclarators(spec, start, type, name_pos);
    if (!decls.empty()) {
      ast_.globals_.push_back(
          Finish(Make(AstKind::kDeclStmt, {}, std::move(decls)), start));
    }
  }

  void ParseFunction(const Specifiers& spec, const TypeInfo& ret,
                     std::size_t start, std::size_t name_pos) {
    if (ret.IsArray()) Fail("functions cannot return arrays");
    Expect("(");
    std::vector<AstId> params;
    if (AtKeyword("void") && Ahead(1).IsPunct(")")) Next();
    while (!AtPunct(")")) {
      if (Accept("...")) break;
      std::size_t param_start = p_;
      Specifiers pspec = ParseSpecifiers();
      std::size_t pname;
      TypeInfo ptype = ParseDeclarator(pspec.type, true, &pname);
      AstNode n = Make(AstKind::kVarDecl,
                       pname == SIZE_MAX ? "" : ast_.tokens_[sig_[pname]].text);
      n.type = ptype;
      for (AstId d : ptype.dims) {
        if (d != kNoNode) n.children.push_back(d);
      }
      params.push_back(Finish(std::move(n), param_start));
      if (!Accept(",")) break;
    }
    Expect(")");
    if (Accept(";")) return;  // prototype
    if (!AtPunct("{")) Fail("expected function body before " + Describe(Cur()));
    AstId body = ParseCompound();
    AstNode fn = Make(AstKind::kFunction, ast_.tokens_[sig_[name_pos]].text,
                      std::move(params));
    fn.children.push_back(body);
    fn.type = ret;
    (void)spec;
    ast_.functions_.push_back(Finish(std::move(fn), start));
  }

  // --- statements ---------------------------------------------------------

  std::vector<std::size_t> LeadingComments(std::size_t token_index) const {
    std::vector<std::size_t> out;
    std::size_t i = token_index;
    while (i > 0 && ast_.tokens_[i - 1].IsTrivia()) {
      --i;
      if (ast_.tokens_[i].kind == TokenKind::kComment) out.push_back(i);
    }
    return {out.rbegin(), out.rend()};
  }

  AstId ParseCompound() {
    std::size_t start = p_;
    Expect("{");
    std::vector<AstId> stmts;
    while (!AtPunct("}")) {
      if (Cur().kind == TokenKind::kEof) Fail("unterminated block");
      stmts.push_back(ParseStatement());
    }
    Next();
    return Finish(Make(AstKind::kCompound, {}, std::move(stmts)), start);
  }

  AstId ParseStatement() {
    std::vector<std::size_t> comments = LeadingComments(sig_[p_]);
    AstId id = ParseStatementInner();
    ast_.nodes_[id].leading_comments = std::move(comments);
    return id;
  }

  AstId ParseStatementInner() {
    std::size_t start = p_;
    const Token& t = Cur();
    if (t.IsPunct("{")) return ParseCompound();
    if (t.IsPunct(";")) {
      Next();
      return Finish(Make(AstKind::kEmpty), start);
    }
    if (t.kind == TokenKind::kKeyword) {
      if (t.text == "if") {
        Next();
        Expect("(");
        AstId cond = ParseAssignment();
        Expect(")");
        AstId then_stmt = ParseStatement();
        AstId else_stmt = kNoNode;
        if (AtKeyword("else")) {
          Next();
          else_stmt = ParseStatement();
        }
        return Finish(Make(AstKind::kIf, {}, {cond, then_stmt, else_stmt}), start);
      }
      if (t.text == "while") {
        Next();
        Expect("(");
        AstId cond = ParseAssignment();
        Expect(")");
        AstId body = ParseStatement();
        return Finish(Make(AstKind::kWhile, {}, {cond, body}), start);
      }
      if (t.text == "for") {
        Next();
        Expect("(");
        AstId init = kNoNode;
        if (!Accept(";")) {
          if (IsTypeStart(Cur())) {
            init = ParseDeclStatement();
          } else {
            init = ParseAssignment();
            Expect(";");
          }
        }
        AstId cond = AtPunct(";") ? kNoNode : ParseAssignment();
        Expect(";");
        AstId step = AtPunct(")") ? kNoNode : ParseAssignment();
        Expect(")");
        AstId body = ParseStatement();
        return Finish(Make(AstKind::kFor, {}, {init, cond, step, body}), start);
      }
      if (t.text == "return") {
        Next();
        AstId value = AtPunct(";") ? kNoNode : ParseAssignment();
        Expect(";");
        return Finish(Make(AstKind::kReturn, {}, {value}), start);
      }
      if (t.text == "break" || t.text == "continue") {
        AstKind kind = t.text == "break" ? AstKind::kBreak : AstKind::kContinue;
        Next();
        Expect(";");
        return Finish(Make(kind), start);
      }
      if (t.text == "goto" || t.text == "switch" || t.text == "do" ||
          t.text == "case" || t.text == "default") {
        Fail("'" + t.text + "' is not supported");
      }
      if (t.text == "else") Fail("'else' without a matching 'if'");
    }
    if (t.kind == TokenKind::kIdentifier && Ahead(1).IsPunct(":")) {
      Fail("labels are not supported");
    }
    if (IsTypeStart(t)) return ParseDeclStatement();
    AstId expr = ParseAssignment();
    Expect(";");
    return Finish(Make(AstKind::kExprStmt, {}, {expr}), start);
  }

  AstId ParseDeclStatement() {
    std::size_t start = p_;
    Specifiers spec = ParseSpecifiers();
    if (Accept(";")) return Finish(Make(AstKind::kEmpty), start);
    std::size_t name_pos;
    TypeInfo type = ParseDeclarator(spec.type, false, &name_pos);
    if (AtPunct("(")) Fail("nested function declarations are not supported");
    std::vector<AstId> decls = ParseInitDeclarators(spec, start, type, name_pos);
    if (decls.empty()) return Finish(Make(AstKind::kEmpty), start);
    return Finish(Make(AstKind::kDeclStmt, {}, std::move(decls)), start);
  }

  // --- expressions --------------------------------------------------------

  static int BinaryPrecedence(const Token& t) {
    if (t.kind != TokenKind::kPunct) return -1;
    const std::string& s = t.text;
    if (s == "||") return 1;
    if (s == "&&") return 2;
    if (s == "==" || s == "!=") return 3;
    if (s == "<" || s == "<=" || s == ">" || s == ">=") return 4;
    if (s == "+" || s == "-") return 5;
    if (s == "*" || s == "/" || s == "%") return 6;
    return -1;
  }

  void RejectUnsupportedOperator() const {
    static const std::set<std::string> kUnsupported = {
        "|", "^", "&", "<<", ">>", "?", "->", ".", "~", "&=", "|=", "^=",
        "<<=", ">>="};
    const Token& t = Cur();
    if (t.kind == TokenKind::kPunct && kUnsupported.count(t.text) > 0) {
      Fail("operator '" + t.text + "' is not supported");
    }
  }

  AstId ParseAssignment() {
    std::size_t start = p_;
    AstId lhs = ParseBinary(1);
    const Token& t = Cur();
    if (t.kind == TokenKind::kPunct &&
        (t.text == "=" || t.text == "+=" || t.text == "-=" || t.text == "*=" ||
         t.text == "/=" || t.text == "%=")) {
      std::string op = t.text;
      Next();
      AstId rhs = ParseAssignment();
      return Finish(Make(AstKind::kAssign, op, {lhs, rhs}), start);
    }
    RejectUnsupportedOperator();
    return lhs;
  }

  AstId ParseBinary(int min_prec) {
    std::size_t start = p_;
    AstId lhs = ParseUnary();
    while (true) {
      int prec = BinaryPrecedence(Cur());
      if (prec < min_prec) {
        RejectUnsupportedOperator();
        return lhs;
      }
      std::string op = Cur().text;
      Next();
      AstId rhs = ParseBinary(prec + 1);
      lhs = Finish(Make(AstKind::kBinary, op, {lhs, rhs}), start);
    }
  }

  bool AtCast() const {
    return AtPunct("(") && IsTypeStart(Ahead(1)) && !Ahead(1).IsKeyword("typedef");
  }

  TypeInfo ParseTypeName() {
    Specifiers spec = ParseSpecifiers();
    std::size_t name_pos;
    TypeInfo type = ParseDeclarator(spec.type, true, &name_pos);
    if (name_pos != SIZE_MAX) Fail("unexpected identifier in type name");
    return type;
  }

  AstId ParseUnary() {
    std::size_t start = p_;
    const Token& t = Cur();
    if (t.kind == TokenKind::kPunct &&
        (t.text == "-" || t.text == "+" || t.text == "!" || t.text == "&" ||
         t.text == "*" || t.text == "++" || t.text == "--")) {
      std::string op = t.text;
      Next();
      AstId operand = ParseUnary();
      return Finish(Make(AstKind::kUnary, op, {operand}), start);
    }
    if (t.IsPunct("~")) Fail("operator '~' is not supported");
    if (t.IsKeyword("sizeof")) {
      Next();
      if (AtCast()) {
        Next();
        AstNode n = Make(AstKind::kSizeofType);
        n.type = ParseTypeName();
        Expect(")");
        return Finish(std::move(n), start);
      }
      AstId operand = ParseUnary();
      return Finish(Make(AstKind::kSizeofExpr, {}, {operand}), start);
    }
    if (AtCast()) {
      Next();
      TypeInfo type = ParseTypeName();
      Expect(")");
      AstId operand = ParseUnary();
      AstNode n = Make(AstKind::kCast, {}, {operand});
      n.type = std::move(type);
      return Finish(std::move(n), start);
    }
    return ParsePostfix();
  }

  AstId ParsePostfix() {
    std::size_t start = p_;
    AstId expr = ParsePrimary();
    while (true) {
      if (Accept("[")) {
        AstId index = ParseAssignment();
        Expect("]");
        expr = Finish(Make(AstKind::kIndex, {}, {expr, index}), start);
      } else if (AtPunct("++") || AtPunct("--")) {
        std::string op = Cur().text;
        Next();
        expr = Finish(Make(AstKind::kPostfix, op, {expr}), start);
      } else if (AtPunct("(")) {
        Fail("calls through expressions (function pointers) are not supported");
      } else if (AtPunct("->") || AtPunct(".")) {
        Fail("member access is not supported");
      } else {
        return expr;
      }
    }
  }

  AstId ParsePrimary() {
    std::size_t start = p_;
    const Token& t = Cur();
    switch (t.kind) {
      case TokenKind::kIdentifier: {
        std::string name = t.text;
        Next();
        if (Accept("(")) {
          std::vector<AstId> args;
          while (!AtPunct(")")) {
            args.push_back(ParseAssignment());
            if (!Accept(",")) break;
          }
          Expect(")");
          return Finish(Make(AstKind::kCall, name, std::move(args)), start);
        }
        return Finish(Make(AstKind::kIdentifier, name), start);
      }
      case TokenKind::kIntLiteral: {
        AstNode n = Make(AstKind::kIntLiteral, t.text);
        n.value_known = ParseIntLiteral(t.text, &n.int_value);
        Next();
        return Finish(std::move(n), start);
      }
      case TokenKind::kFloatLiteral: {
        AstNode n = Make(AstKind::kFloatLiteral, t.text);
        Next();
        return Finish(std::move(n), start);
      }
      case TokenKind::kCharLiteral: {
        AstNode n = Make(AstKind::kCharLiteral, t.text);
        std::string decoded;
        if (DecodeLiteral(t.text, &decoded, &n.wide) && decoded.size() == 1) {
          n.int_value = static_cast<unsigned char>(decoded[0]);
          n.value_known = true;
        }
        Next();
        return Finish(std::move(n), start);
      }
      case TokenKind::kStringLiteral: {
        AstNode n = Make(AstKind::kStringLiteral);
        bool ok = true;
        while (Cur().kind == TokenKind::kStringLiteral) {
          std::string part;
          bool wide = false;
          ok = DecodeLiteral(Cur().text, &part, &wide) && ok;
          n.wide = n.wide || wide;
          n.string_value += part;
          if (!n.text.empty()) n.text += ' ';
          n.text += Cur().text;
          Next();
        }
        n.value_known = ok;
        return Finish(std::move(n), start);
      }
      case TokenKind::kPunct:
        if (t.text == "(") {
          Next();
          AstId inner = ParseAssignment();
          Expect(")");
          return inner;
        }
        break;
      case TokenKind::kUnknown:
        Fail("unexpected character '" + t.text + "'");
      default:
        break;
    }
    Fail("expected an expression before " + Describe(t));
  }

  Ast ast_;
  std::vector<std::size_t> sig_;
  std::size_t p_ = 0;
  std::map<std::string, TypeInfo> typedefs_;
};

Ast Parse(std::string_view source) { return Parser(source).ParseUnit(); }

Ast ParseExpression(std::string_view text) {
  return Parser(text).ParseStandaloneExpression();
}

}  // namespace viperkit::frontend
