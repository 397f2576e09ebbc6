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

#include "viperkit/perturb/sf_perturb.h"

#include <algorithm>
#include <functional>
#include <iterator>
#include <set>

#include "viperkit/cpg/apis.h"
#include "viperkit/frontend/edits.h"
#include "viperkit/frontend/formatter.h"
#include "viperkit/frontend/parser.h"

namespace viperkit::perturb {

using frontend::Ast;
using frontend::AstId;
using frontend::AstKind;
using frontend::AstNode;
using frontend::CodeSample;
using frontend::EditScript;
using frontend::Token;
using frontend::TokenKind;

namespace {

// libc and SARD support functions that samples call without defining.
constexpr std::string_view kKeptNames[] = {
    "main",          "printf",         "fprintf",           "sprintf",
    "snprintf",      "puts",           "putchar",           "scanf",
    "sscanf",        "fscanf",         "strlen",            "wcslen",
    "strcat",        "wcscat",         "strcmp",            "strncmp",
    "strcpy",        "wcscpy",         "strchr",            "strstr",
    "atoi",          "atol",           "rand",              "srand",
    "time",          "exit",           "abort",             "realloc",
    "fopen",         "fclose",         "fread",             "fwrite",
    "printLine",     "printWLine",      "printIntLine",      "printShortLine",
    "printLongLine", "printUnsignedLine", "printHexCharLine", "printSizeTLine",
    "printDoubleLine", "printStructLine", "printBytesLine", "globalReturnsTrue",
};

std::string LineIndent(const std::string& source, int line) {
  std::vector<std::size_t> offsets = frontend::LineOffsets(source);
  std::size_t begin = offsets.at(line - 1);
  std::size_t end = begin;
  while (end < source.size() && (source[end] == ' ' || source[end] == '\t')) ++end;
  return source.substr(begin, end - begin);
}

PerturbedVariant MakeSfVariant(const CodeSample& sample, VariantKind kind, std::string source,
                               std::vector<int> line_map, std::string recipe) {
  PerturbedVariant v;
  v.variant_id = MakeVariantId(sample.sample_id, std::nullopt, kind, 1);
  v.parent = sample.sample_id;
  v.kind = kind;
  v.source = std::move(source);
  v.line_map = std::move(line_map);
  v.expected_label = sample.label;
  v.recipe = std::move(recipe);
  if (sample.vulnerable_lines) v.vulnerable_lines = MapLines(*sample.vulnerable_lines, v.line_map);
  return v;
}

// Puts `stmt` right after the opening brace of every function body: on the
// brace's line when code or a block comment follows it there, else on a new
// line indented like the body.
frontend::EditResult InsertAtFunctionEntry(const std::string& source, const Ast& ast,
                                           const std::function<std::string(const AstNode&)>& stmt) {
  EditScript script;
  const frontend::TokenList& toks = ast.tokens();
  for (AstId fn : ast.functions()) {
    const AstNode& body = ast.node(ast.FunctionBody(fn));
    const Token& brace = toks.at(body.first_token);
    int line = brace.span.begin.line;
    std::string text = stmt(ast.node(fn));
    bool inline_insert = false;
    for (std::size_t i = body.first_token + 1; i < toks.size(); ++i) {
      const Token& t = toks[i];
      if (t.kind == TokenKind::kEof || t.span.begin.line != line) break;
      if (t.kind != TokenKind::kComment || t.span.end.line != line) {
        inline_insert = true;
        break;
      }
    }
    if (inline_insert) {
      script.ReplaceSpan(brace.span.end.offset, brace.span.end.offset, " " + text);
      continue;
    }
    std::string indent;
    if (!body.children.empty()) {
      indent = LineIndent(source, ast.node(body.children.front()).span.begin.line);
    } else {
      indent = LineIndent(source, line) + "    ";
    }
    std::size_t eol = source.find('\n', brace.span.end.offset);
    if (eol == std::string::npos) eol = source.size();
    // Keep a CR of a CRLF file on the brace line.
    if (eol > brace.span.end.offset && source[eol - 1] == '\r') --eol;
    script.ReplaceSpan(eol, eol, "\n" + indent + text);
  }
  return frontend::ApplyEditsWithLineMap(source, script);
}

bool AfterStruct(const frontend::TokenList& toks, std::size_t i) {
  while (i-- > 0) {
    if (toks[i].IsTrivia()) continue;
    return toks[i].kind == TokenKind::kKeyword && toks[i].text == "struct";
  }
  return false;
}

}  // namespace

bool IsReservedName(std::string_view name) {
  return cpg::ClassifyCallee(name) != cpg::ApiClass::kNone || cpg::IsLibraryName(name) ||
         std::ranges::find(kKeptNames, name) != std::end(kKeptNames);
}

PerturbedVariant GenSfNodeSet(const CodeSample& sample) {
  Ast ast = frontend::Parse(sample.source);
  frontend::EditResult r = InsertAtFunctionEntry(
      sample.source, ast, [](const AstNode&) { return std::string("printf(\"\");"); });
  return MakeSfVariant(sample, VariantKind::kSfNodeSet, std::move(r.text), std::move(r.line_map),
                       "printf(\"\"); at every function entry");
}

PerturbedVariant GenSfEdgeSet(const CodeSample& sample) {
  Ast ast = frontend::Parse(sample.source);
  frontend::EditResult r = InsertAtFunctionEntry(sample.source, ast, [](const AstNode& fn) {
    return std::string(fn.type.IsVoid() ? "if(0==1) return;" : "if(0==1) return 0;");
  });
  return MakeSfVariant(sample, VariantKind::kSfEdgeSet, std::move(r.text), std::move(r.line_map),
                       "if(0==1) return; at every function entry");
}

SymbolMap BuildSymbolMap(const Ast& ast) {
  std::set<std::string> variables, functions;
  auto user = [&](const std::string& name) {
    return !name.empty() && !IsReservedName(name) && !ast.defines().count(name);
  };
  auto collect = [&](AstId root) {
    ast.Walk(root, [&](const AstNode& n) {
      if (n.kind == AstKind::kFunction && user(n.text)) functions.insert(n.text);
      if (n.kind == AstKind::kCall && user(n.text)) functions.insert(n.text);
      if ((n.kind == AstKind::kVarDecl || n.kind == AstKind::kIdentifier) && user(n.text)) {
        variables.insert(n.text);
      }
      return true;
    });
  };
  for (AstId g : ast.globals()) collect(g);
  for (AstId fn : ast.functions()) collect(fn);
  for (const std::string& f : functions) variables.erase(f);

  // Identifier tokens that stay as they are; fresh names must not collide.
  const frontend::TokenList& toks = ast.tokens();
  std::set<std::string> kept;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.kind != TokenKind::kIdentifier) continue;
    bool renamed = (variables.count(t.text) || functions.count(t.text)) && !AfterStruct(toks, i);
    if (!renamed) kept.insert(t.text);
  }
  for (const auto& [name, value] : ast.defines()) kept.insert(name);

  SymbolMap map;
  int next_var = 0;
  int next_fun = 0;
  auto fresh = [&](const char* prefix, int* counter) {
    std::string name;
    do {
      name = prefix + std::to_string(++*counter);
    } while (kept.count(name));
    return name;
  };
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.kind != TokenKind::kIdentifier || AfterStruct(toks, i)) continue;
    if (functions.count(t.text) && !map.functions.count(t.text)) {
      map.functions[t.text] = fresh("FUN", &next_fun);
    } else if (variables.count(t.text) && !map.variables.count(t.text)) {
      map.variables[t.text] = fresh("VAR", &next_var);
    }
  }
  return map;
}

std::string ApplySymbolMap(const Ast& ast, const SymbolMap& map) {
  EditScript script;
  const frontend::TokenList& toks = ast.tokens();
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.kind != TokenKind::kIdentifier || AfterStruct(toks, i)) continue;
    std::string to = map.Rename(t.text);
    if (to != t.text) script.ReplaceSpan(t.span.begin.offset, t.span.end.offset, to);
  }
  return frontend::ApplyEdits(ast.source(), script);
}

std::pair<PerturbedVariant, SymbolMap> GenSfIdentifier(const CodeSample& sample) {
  Ast ast = frontend::Parse(sample.source);
  SymbolMap map = BuildSymbolMap(ast);
  std::string text = ApplySymbolMap(ast, map);
  // Renaming never adds or removes a newline.
  std::vector<int> line_map(frontend::CountLines(sample.source));
  for (std::size_t i = 0; i < line_map.size(); ++i) line_map[i] = static_cast<int>(i) + 1;
  PerturbedVariant v =
      MakeSfVariant(sample, VariantKind::kSfIdentifier, std::move(text), std::move(line_map),
                    "rename " + std::to_string(map.variables.size()) + " variables and " +
                        std::to_string(map.functions.size()) + " functions");
  v.symbols = map;
  return {std::move(v), std::move(map)};
}

FormattingVariant GenSfFormatting(const CodeSample& sample) {
  frontend::FormatResult r = frontend::NormalizeFormatting(sample.source);
  FormattingVariant out;
  out.noop = r.text == sample.source;
  out.variant = MakeSfVariant(sample, VariantKind::kSfFormatting, std::move(r.text),
                              std::move(r.line_map), "canonical layout");
  return out;
}

}  // namespace viperkit::perturb
