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

#include "viperkit/frontend/formatter.h"

#include <algorithm>
#include <set>

#include "viperkit/frontend/edits.h"
#include "viperkit/frontend/lexer.h"
#include "viperkit/frontend/parser.h"

namespace viperkit::frontend {

namespace {

constexpr int kIndentWidth = 4;

bool IsWordLike(const Token& t) {
  switch (t.kind) {
    case TokenKind::kIdentifier:
    case TokenKind::kKeyword:
    case TokenKind::kIntLiteral:
    case TokenKind::kFloatLiteral:
    case TokenKind::kCharLiteral:
    case TokenKind::kStringLiteral:
      return true;
    default:
      return false;
  }
}

class Formatter {
 public:
  explicit Formatter(const Ast& ast)
      : ast_(ast),
        tokens_(ast.tokens()),
        newline_depth_(tokens_.size(), -1),
        same_line_(tokens_.size(), false),
        depth_hint_(tokens_.size(), -1) {}

  FormatResult Run() {
    ClassifyOperators();
    for (AstId fn : ast_.functions()) PlanFunction(fn);
    return Emit();
  }

 private:
  std::size_t NextSignificant(std::size_t i) const {
    for (++i; i < tokens_.size(); ++i) {
      if (!tokens_[i].IsTrivia()) return i;
    }
    return tokens_.size() - 1;
  }

  std::size_t PrevSignificant(std::size_t i) const {
    while (i > 0) {
      --i;
      if (!tokens_[i].IsTrivia()) return i;
    }
    return SIZE_MAX;
  }

  // Finds operator tokens by their position between operands.
  void ClassifyOperators() {
    for (std::size_t id = 0; id < ast_.size(); ++id) {
      const AstNode& n = ast_.node(static_cast<AstId>(id));
      switch (n.kind) {
        case AstKind::kBinary:
        case AstKind::kAssign:
          binary_.insert(NextSignificant(ast_.node(n.children[0]).last_token));
          break;
        case AstKind::kUnary:
          unary_.insert(n.first_token);
          break;
        case AstKind::kPostfix:
          postfix_.insert(n.last_token);
          break;
        case AstKind::kCast:
          cast_close_.insert(PrevSignificant(ast_.node(n.children[0]).first_token));
          break;
        case AstKind::kVarDecl:
          if (n.init != kNoNode) {
            binary_.insert(PrevSignificant(ast_.node(n.init).first_token));
          }
          break;
        case AstKind::kFunction:
          function_close_.insert(n.last_token);
          break;
        default:
          break;
      }
    }
  }

  void Mark(std::size_t tok, int depth) {
    newline_depth_[tok] = depth;
    depth_hint_[tok] = depth;
  }

  void MarkSameLine(std::size_t tok, int depth) {
    same_line_[tok] = true;
    depth_hint_[tok] = depth;
  }

  void PlanFunction(AstId fn) {
    const AstNode& body = ast_.node(ast_.FunctionBody(fn));
    MarkSameLine(body.first_token, 0);
    PlanBlockContents(body, 0);
  }

  void PlanBlockContents(const AstNode& block, int depth) {
    for (AstId child : block.children) PlanStatement(child, depth + 1, true);
    Mark(block.last_token, depth);
  }

  void PlanBody(AstId body_id, int depth) {
    const AstNode& body = ast_.node(body_id);
    if (body.kind == AstKind::kCompound) {
      MarkSameLine(body.first_token, depth);
      PlanBlockContents(body, depth);
    } else {
      PlanStatement(body_id, depth + 1, true);
    }
  }

  void PlanStatement(AstId id, int depth, bool line_start) {
    const AstNode& s = ast_.node(id);
    if (line_start) Mark(s.first_token, depth);
    for (std::size_t t = s.first_token; t <= s.last_token; ++t) {
      if (depth_hint_[t] < 0) depth_hint_[t] = depth;
    }
    switch (s.kind) {
      case AstKind::kCompound:
        PlanBlockContents(s, depth);
        break;
      case AstKind::kIf: {
        AstId then_id = s.children[1];
        PlanBody(then_id, depth);
        AstId else_id = s.children[2];
        if (else_id == kNoNode) break;
        const AstNode& then_stmt = ast_.node(then_id);
        std::size_t else_tok = NextSignificant(then_stmt.last_token);
        if (then_stmt.kind == AstKind::kCompound) {
          MarkSameLine(else_tok, depth);
        } else {
          Mark(else_tok, depth);
        }
        const AstNode& else_stmt = ast_.node(else_id);
        if (else_stmt.kind == AstKind::kIf) {
          MarkSameLine(else_stmt.first_token, depth);
          PlanStatement(else_id, depth, false);
        } else {
          PlanBody(else_id, depth);
        }
        break;
      }
      case AstKind::kWhile:
        PlanBody(s.children[1], depth);
        break;
      case AstKind::kFor:
        PlanBody(s.children[3], depth);
        break;
      default:
        break;
    }
  }

  bool WouldMerge(const Token& a, const Token& b) const {
    std::string joined = a.text + b.text;
    TokenList relexed = Lex(joined);
    std::size_t n = 0;
    for (const Token& t : relexed) {
      if (t.kind != TokenKind::kEof) ++n;
    }
    return n != 2 || relexed[0].text != a.text;
  }

  bool WantSpace(std::size_t prev_i, std::size_t cur_i) const {
    const Token& prev = tokens_[prev_i];
    const Token& cur = tokens_[cur_i];
    if (cur.IsPunct(";") || cur.IsPunct(",") || cur.IsPunct(")") || cur.IsPunct("]"))
      return false;
    if (prev.IsPunct("(") || prev.IsPunct("[")) return false;
    if (binary_.count(prev_i) || binary_.count(cur_i)) return true;
    if (unary_.count(prev_i)) return false;
    if (postfix_.count(cur_i)) return false;
    if (cur.IsPunct("(")) {
      if (prev.kind == TokenKind::kIdentifier || prev.IsKeyword("sizeof")) return false;
      if (prev.kind == TokenKind::kKeyword) return true;
      return !prev.IsPunct(")");
    }
    if (cur.IsPunct("[")) return false;
    if (prev.IsPunct(",") || prev.IsPunct(";")) return true;
    if (cast_close_.count(prev_i)) return false;
    if (cur.IsPunct("{")) return true;
    if (prev.IsPunct("{") || cur.IsPunct("}")) return false;
    if (prev.kind == TokenKind::kKeyword) return true;
    if (cur.IsPunct("*") && IsWordLike(prev)) return true;
    return IsWordLike(prev) && IsWordLike(cur);
  }

  bool IsInlineComment(std::size_t i) const {
    const Token& t = tokens_[i];
    if (t.kind != TokenKind::kComment || !t.text.starts_with("/*")) return false;
    bool code_before = i > 0 && tokens_[i - 1].kind != TokenKind::kPreprocessor &&
                       tokens_[i - 1].span.end.line == t.span.begin.line &&
                       !(tokens_[i - 1].kind == TokenKind::kComment &&
                         tokens_[i - 1].text.starts_with("//"));
    bool code_after = i + 1 < tokens_.size() &&
                      tokens_[i + 1].kind != TokenKind::kEof &&
                      tokens_[i + 1].span.begin.line == t.span.end.line;
    return code_before && code_after;
  }

  int CommentDepth(std::size_t i, int fallback) const {
    std::size_t next = NextSignificant(i);
    if (newline_depth_[next] >= 0) {
      return tokens_[next].IsPunct("}") ? newline_depth_[next] + 1 : newline_depth_[next];
    }
    if (depth_hint_[next] >= 0) return depth_hint_[next];
    return fallback;
  }

  FormatResult Emit() {
    FormatResult result;
    std::string& out = result.text;
    result.line_map.assign(CountLines(ast_.source()), 0);
    int out_line = 1;
    int brace_depth = 0;
    int last_depth = 0;
    bool first = true;
    bool force_newline = false;
    bool toplevel_break = false;
    std::size_t prev_i = SIZE_MAX;
    const std::string& src = ast_.source();
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const Token& t = tokens_[i];
      if (t.kind == TokenKind::kEof) break;
      bool own_line_comment = false;
      if (t.kind == TokenKind::kComment) {
        std::size_t next = NextSignificant(i);
        own_line_comment = !IsInlineComment(i) || newline_depth_[next] >= 0 ||
                           toplevel_break;
      }
      bool newline = !first && (force_newline || t.kind == TokenKind::kPreprocessor ||
                                own_line_comment || newline_depth_[i] >= 0 ||
                                (toplevel_break && !t.IsTrivia()));
      int depth;
      if (t.kind == TokenKind::kPreprocessor) {
        depth = 0;
      } else if (t.kind == TokenKind::kComment) {
        depth = CommentDepth(i, brace_depth == 0 ? 0 : last_depth);
      } else if (newline_depth_[i] >= 0) {
        depth = newline_depth_[i];
      } else if (depth_hint_[i] >= 0) {
        depth = same_line_[i] ? depth_hint_[i] : depth_hint_[i] + 1;
      } else {
        depth = brace_depth == 0 ? 0 : last_depth + 1;
      }
      if (newline) {
        std::size_t gap_begin = prev_i == SIZE_MAX ? 0 : tokens_[prev_i].span.end.offset;
        std::size_t blank = std::count(src.begin() + gap_begin,
                                       src.begin() + t.span.begin.offset, '\n');
        out += '\n';
        ++out_line;
        if (blank >= 2) {
          out += '\n';
          ++out_line;
        }
        out.append(static_cast<std::size_t>(depth * kIndentWidth), ' ');
      } else if (!first) {
        bool space;
        if (t.kind == TokenKind::kComment || tokens_[prev_i].kind == TokenKind::kComment) {
          space = true;
        } else if (same_line_[i]) {
          space = true;
        } else {
          space = WantSpace(prev_i, i) || WouldMerge(tokens_[prev_i], t);
        }
        if (space) out += ' ';
      }
      if (t.span.begin.line - 1 < static_cast<int>(result.line_map.size()) &&
          result.line_map[t.span.begin.line - 1] == 0) {
        result.line_map[t.span.begin.line - 1] = out_line;
      }
      out += t.text;
      out_line += static_cast<int>(std::count(t.text.begin(), t.text.end(), '\n'));
      first = false;
      if (newline && t.kind != TokenKind::kComment && t.kind != TokenKind::kPreprocessor) {
        last_depth = depth;
      }
      force_newline = t.kind == TokenKind::kPreprocessor || own_line_comment;
      if (!t.IsTrivia()) {
        if (t.IsPunct("{")) ++brace_depth;
        if (t.IsPunct("}")) --brace_depth;
        toplevel_break = brace_depth == 0 && (t.IsPunct(";") || function_close_.count(i));
      }
      prev_i = i;
    }
    if (!out.empty()) out += '\n';
    return result;
  }

  const Ast& ast_;
  const TokenList& tokens_;
  std::vector<int> newline_depth_;
  std::vector<bool> same_line_;
  std::vector<int> depth_hint_;
  std::set<std::size_t> binary_;
  std::set<std::size_t> unary_;
  std::set<std::size_t> postfix_;
  std::set<std::size_t> cast_close_;
  std::set<std::size_t> function_close_;
};

}  // namespace

FormatResult NormalizeFormatting(std::string_view source) {
  Ast ast = Parse(source);
  return Formatter(ast).Run();
}

}  // namespace viperkit::frontend
