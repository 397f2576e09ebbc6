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

#include "viperkit/frontend/annotations.h"

#include <optional>

#include "viperkit/frontend/lexer.h"

namespace viperkit::frontend {

namespace {

std::string_view CommentBody(std::string_view comment) {
  if (comment.starts_with("/*")) {
    comment.remove_prefix(2);
    if (comment.ends_with("*/")) comment.remove_suffix(2);
  } else if (comment.starts_with("//")) {
    comment.remove_prefix(2);
  }
  while (!comment.empty() &&
         (comment.front() == ' ' || comment.front() == '\t' ||
          comment.front() == '\n' || comment.front() == '\r')) {
    comment.remove_prefix(1);
  }
  return comment;
}

// POTENTIAL FLAW is tested first; "FLAW" alone would not match it anyway
// since the body must start with the prefix.
std::optional<AnnotationKind> MatchPrefix(std::string_view body) {
  if (body.starts_with("POTENTIAL FLAW")) return AnnotationKind::kPotentialFlaw;
  if (body.starts_with("FLAW")) return AnnotationKind::kFlaw;
  if (body.starts_with("FIX")) return AnnotationKind::kFix;
  return std::nullopt;
}

}  // namespace

std::string_view AnnotationKindName(AnnotationKind kind) {
  switch (kind) {
    case AnnotationKind::kFlaw:
      return "FLAW";
    case AnnotationKind::kPotentialFlaw:
      return "POTENTIAL FLAW";
    case AnnotationKind::kFix:
      return "FIX";
  }
  return "?";
}

std::vector<SardAnnotation> ExtractAnnotations(std::string_view source) {
  TokenList tokens = Lex(source);
  std::vector<SardAnnotation> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.kind != TokenKind::kComment) continue;
    std::string_view body = CommentBody(t.text);
    std::optional<AnnotationKind> kind = MatchPrefix(body);
    if (!kind) continue;
    int line = t.span.end.line;
    for (std::size_t j = i + 1; j < tokens.size(); ++j) {
      if (tokens[j].kind == TokenKind::kComment) continue;
      if (tokens[j].kind != TokenKind::kEof) line = tokens[j].span.begin.line;
      break;
    }
    out.push_back(SardAnnotation{*kind, line, std::string(body)});
  }
  return out;
}

}  // namespace viperkit::frontend
