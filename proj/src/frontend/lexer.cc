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

#include "viperkit/frontend/lexer.h"

#include <algorithm>
#include <array>
#include <cctype>

namespace viperkit::frontend {
namespace {

constexpr std::array<std::string_view, 44> kKeywords = {
    "auto",     "break",    "case",     "char",     "const",    "continue",
    "default",  "do",       "double",   "else",     "enum",     "extern",
    "float",    "for",      "goto",     "if",       "inline",   "int",
    "long",     "register", "restrict", "return",   "short",    "signed",
    "sizeof",   "static",   "struct",   "switch",   "typedef",  "union",
    "unsigned", "void",     "volatile", "while",    "_Bool",    "_Complex",
    "_Alignas", "_Alignof", "_Atomic",  "_Generic", "_Noreturn", "_Static_assert",
    "_Thread_local", "_Imaginary"};

// Longest first so that the greedy scan picks "<<=" over "<<" over "<".
constexpr std::array<std::string_view, 23> kMultiPunct = {
    "<<=", ">>=", "...", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=",
    "&&",  "||",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=", "^=", "##"};

constexpr std::string_view kSinglePunct = "[](){}.;,:?~!+-*/%<>=&|^#";

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  TokenList Run() {
    TokenList out;
    bool line_start = true;
    while (pos_.offset < src_.size()) {
      char c = Peek();
      if (c == '\n') {
        Advance();
        line_start = true;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        Advance();
        continue;
      }
      SourcePos start = pos_;
      TokenKind kind;
      if (c == '/' && Peek(1) == '*') {
        kind = TokenKind::kComment;
        Advance(2);
        while (!AtEnd() && !(Peek() == '*' && Peek(1) == '/')) Advance();
        if (!AtEnd()) Advance(2);
      } else if (c == '/' && Peek(1) == '/') {
        kind = TokenKind::kComment;
        while (!AtEnd() && Peek() != '\n') Advance();
      } else if (c == '#' && line_start) {
        kind = TokenKind::kPreprocessor;
        while (!AtEnd() && Peek() != '\n') {
          if (Peek() == '\\' && Peek(1) == '\n') Advance();
          Advance();
        }
      } else if (IsLiteralPrefix()) {
        kind = LexQuoted();
      } else if (IsIdentStart(c)) {
        while (!AtEnd() && IsIdentChar(Peek())) Advance();
        kind = IsCKeyword(Slice(start)) ? TokenKind::kKeyword
                                        : TokenKind::kIdentifier;
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && std::isdigit(static_cast<unsigned char>(Peek(1))))) {
        kind = LexNumber();
      } else if (c == '"' || c == '\'') {
        kind = LexQuoted();
      } else {
        kind = LexPunct();
      }
      line_start = false;
      out.push_back(Token{kind, std::string(Slice(start)), Span{start, pos_}});
    }
    out.push_back(Token{TokenKind::kEof, "", Span{pos_, pos_}});
    return out;
  }

 private:
  bool AtEnd() const { return pos_.offset >= src_.size(); }
  char Peek(std::size_t ahead = 0) const {
    std::size_t i = pos_.offset + ahead;
    return i < src_.size() ? src_[i] : '\0';
  }
  void Advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && !AtEnd(); ++i) {
      if (src_[pos_.offset] == '\n') {
        ++pos_.line;
        pos_.column = 1;
      } else {
        ++pos_.column;
      }
      ++pos_.offset;
    }
  }
  std::string_view Slice(const SourcePos& start) const {
    return src_.substr(start.offset, pos_.offset - start.offset);
  }

  bool IsLiteralPrefix() const {
    char c = Peek();
    if ((c == 'L' || c == 'U' || c == 'u') && (Peek(1) == '"' || Peek(1) == '\''))
      return true;
    return c == 'u' && Peek(1) == '8' && Peek(2) == '"';
  }

  TokenKind LexQuoted() {
    while (Peek() != '"' && Peek() != '\'') Advance();
    char quote = Peek();
    Advance();
    while (!AtEnd() && Peek() != quote && Peek() != '\n') {
      if (Peek() == '\\') Advance();
      Advance();
    }
    if (Peek() == quote) Advance();
    return quote == '"' ? TokenKind::kStringLiteral : TokenKind::kCharLiteral;
  }

  TokenKind LexNumber() {
    bool is_float = false;
    bool hex = Peek() == '0' && (Peek(1) == 'x' || Peek(1) == 'X');
    while (!AtEnd()) {
      char c = Peek();
      if (IsIdentChar(c)) {
        if (!hex && (c == 'e' || c == 'E') && (Peek(1) == '+' || Peek(1) == '-')) {
          is_float = true;
          Advance(2);
          continue;
        }
        if (hex && (c == 'p' || c == 'P') && (Peek(1) == '+' || Peek(1) == '-')) {
          is_float = true;
          Advance(2);
          continue;
        }
        Advance();
      } else if (c == '.') {
        is_float = true;
        Advance();
      } else {
        break;
      }
    }
    return is_float ? TokenKind::kFloatLiteral : TokenKind::kIntLiteral;
  }

  TokenKind LexPunct() {
    std::string_view rest = src_.substr(pos_.offset);
    for (std::string_view p : kMultiPunct) {
      if (rest.starts_with(p)) {
        Advance(p.size());
        return TokenKind::kPunct;
      }
    }
    bool known = kSinglePunct.find(Peek()) != std::string_view::npos;
    Advance();
    return known ? TokenKind::kPunct : TokenKind::kUnknown;
  }

  std::string_view src_;
  SourcePos pos_;
};

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kIntLiteral: return "integer literal";
    case TokenKind::kFloatLiteral: return "float literal";
    case TokenKind::kCharLiteral: return "character literal";
    case TokenKind::kStringLiteral: return "string literal";
    case TokenKind::kPunct: return "punctuator";
    case TokenKind::kComment: return "comment";
    case TokenKind::kPreprocessor: return "preprocessor directive";
    case TokenKind::kUnknown: return "unknown character";
    case TokenKind::kEof: return "end of input";
  }
  return "?";
}

bool IsCKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

TokenList Lex(std::string_view source) { return Lexer(source).Run(); }

std::vector<std::string> SignificantTokens(std::string_view source) {
  std::vector<std::string> out;
  for (Token& t : Lex(source)) {
    if (t.IsTrivia() || t.kind == TokenKind::kEof) continue;
    out.push_back(std::move(t.text));
  }
  return out;
}

bool DecodeLiteral(std::string_view spelling, std::string* out, bool* wide) {
  out->clear();
  *wide = false;
  std::size_t i = 0;
  while (i < spelling.size() && spelling[i] != '"' && spelling[i] != '\'') {
    if (spelling[i] == 'L' || spelling[i] == 'U' || spelling[i] == 'u')
      *wide = spelling[i] != 'u' || spelling.substr(i, 2) != "u8";
    ++i;
  }
  if (i >= spelling.size()) return false;
  char quote = spelling[i++];
  std::size_t end = spelling.size();
  if (end <= i || spelling[end - 1] != quote) return false;
  --end;
  while (i < end) {
    char c = spelling[i++];
    if (c != '\\') {
      out->push_back(c);
      continue;
    }
    if (i >= end) return false;
    char e = spelling[i++];
    switch (e) {
      case 'n': out->push_back('\n'); break;
      case 't': out->push_back('\t'); break;
      case 'r': out->push_back('\r'); break;
      case '0': case '1': case '2': case '3': case '4': case '5': case '6':
      case '7': {
        int v = e - '0';
        for (int k = 0; k < 2 && i < end && spelling[i] >= '0' && spelling[i] <= '7'; ++k)
          v = v * 8 + (spelling[i++] - '0');
        out->push_back(static_cast<char>(v));
        break;
      }
      case 'x': {
        int v = 0;
        int digits = 0;
        while (i < end && HexDigit(spelling[i]) >= 0) {
          v = v * 16 + HexDigit(spelling[i++]);
          ++digits;
        }
        if (digits == 0) return false;
        out->push_back(static_cast<char>(v));
        break;
      }
      case 'a': out->push_back('\a'); break;
      case 'b': out->push_back('\b'); break;
      case 'f': out->push_back('\f'); break;
      case 'v': out->push_back('\v'); break;
      case '\\': case '\'': case '"': case '?': out->push_back(e); break;
      default: return false;
    }
  }
  return true;
}

}  // namespace viperkit::frontend
