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

#ifndef VIPERKIT_FRONTEND_TOKEN_H_
#define VIPERKIT_FRONTEND_TOKEN_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace viperkit::frontend {

// 1-based line and column plus a 0-based byte offset.
struct SourcePos {
  int line = 1;
  int column = 1;
  std::size_t offset = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

// Half-open byte range [begin, end).
struct Span {
  SourcePos begin;
  SourcePos end;

  std::size_t size() const { return end.offset - begin.offset; }
  bool Contains(const Span& other) const {
    return begin.offset <= other.begin.offset && other.end.offset <= end.offset;
  }

  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind : std::uint8_t {
  kIdentifier,
  kKeyword,
  kIntLiteral,
  kFloatLiteral,
  kCharLiteral,
  kStringLiteral,
  kPunct,
  kComment,
  kPreprocessor,
  kUnknown,
  kEof,
};

struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string text;
  Span span;

  // Comments and preprocessor lines are trivia; the parser skips them.
  bool IsTrivia() const {
    return kind == TokenKind::kComment || kind == TokenKind::kPreprocessor;
  }
  bool Is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
  bool IsPunct(std::string_view t) const { return Is(TokenKind::kPunct, t); }
  bool IsKeyword(std::string_view t) const {
    return Is(TokenKind::kKeyword, t);
  }
};

using TokenList = std::vector<Token>;

std::string_view TokenKindName(TokenKind kind);

}  // namespace viperkit::frontend

#endif  // VIPERKIT_FRONTEND_TOKEN_H_
