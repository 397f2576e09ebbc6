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

#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace viperkit::frontend {
namespace {

std::vector<TokenKind> Kinds(const TokenList& tokens) {
  std::vector<TokenKind> kinds;
  for (const Token& t : tokens) kinds.push_back(t.kind);
  return kinds;
}

TEST(LexerTest, ClassifiesBasicTokens) {
  TokenList tokens = Lex("int x = 10; /* c */ x += 'a';");
  std::vector<TokenKind> expected = {
      TokenKind::kKeyword,    TokenKind::kIdentifier, TokenKind::kPunct,
      TokenKind::kIntLiteral, TokenKind::kPunct,      TokenKind::kComment,
      TokenKind::kIdentifier, TokenKind::kPunct,      TokenKind::kCharLiteral,
      TokenKind::kPunct,      TokenKind::kEof};
  EXPECT_EQ(expected, Kinds(tokens));
  EXPECT_EQ("+=", tokens[7].text);
}

TEST(LexerTest, TracksLinesAndColumns) {
  TokenList tokens = Lex("a\n  bb\tc");
  ASSERT_EQ(4u, tokens.size());
  EXPECT_EQ(1, tokens[0].span.begin.line);
  EXPECT_EQ(2, tokens[1].span.begin.line);
  EXPECT_EQ(3, tokens[1].span.begin.column);
  EXPECT_EQ(4u, tokens[1].span.begin.offset);
  EXPECT_EQ(6u, tokens[1].span.end.offset);
}

TEST(LexerTest, PreprocessorLinesAreSingleTokens) {
  TokenList tokens = Lex("#define N \\\n  10\nint a;");
  ASSERT_GE(tokens.size(), 2u);
  EXPECT_EQ(TokenKind::kPreprocessor, tokens[0].kind);
  EXPECT_EQ("#define N \\\n  10", tokens[0].text);
  EXPECT_EQ(3, tokens[1].span.begin.line);
}

TEST(LexerTest, HashInsideALineIsPunctuation) {
  TokenList tokens = Lex("a # b");
  EXPECT_EQ(TokenKind::kPunct, tokens[1].kind);
}

TEST(LexerTest, WideAndPrefixedLiterals) {
  TokenList tokens = Lex("L\"ab\" L'x' u8\"q\" 1.5e3 0x1F 10UL");
  EXPECT_EQ(TokenKind::kStringLiteral, tokens[0].kind);
  EXPECT_EQ("L\"ab\"", tokens[0].text);
  EXPECT_EQ(TokenKind::kCharLiteral, tokens[1].kind);
  EXPECT_EQ(TokenKind::kStringLiteral, tokens[2].kind);
  EXPECT_EQ(TokenKind::kFloatLiteral, tokens[3].kind);
  EXPECT_EQ(TokenKind::kIntLiteral, tokens[4].kind);
  EXPECT_EQ("10UL", tokens[5].text);
}

TEST(LexerTest, GreedyPunctuation) {
  std::vector<std::string> sig = SignificantTokens("a<<=b--->c");
  std::vector<std::string> expected = {"a", "<<=", "b", "--", "->", "c"};
  EXPECT_EQ(expected, sig);
}

TEST(LexerTest, UnknownCharactersDoNotStopTheLexer) {
  TokenList tokens = Lex("a @ b");
  EXPECT_EQ(TokenKind::kUnknown, tokens[1].kind);
  EXPECT_EQ("b", tokens[2].text);
}

TEST(LexerTest, UnterminatedCommentRunsToEnd) {
  TokenList tokens = Lex("x /* never closed");
  ASSERT_EQ(3u, tokens.size());
  EXPECT_EQ(TokenKind::kComment, tokens[1].kind);
}

TEST(LexerTest, DecodeLiteralHandlesEscapes) {
  std::string out;
  bool wide = false;
  ASSERT_TRUE(DecodeLiteral("\"a\\n\\x41\\101\\\\\"", &out, &wide));
  EXPECT_EQ("a\nAA\\", out);
  EXPECT_FALSE(wide);
  ASSERT_TRUE(DecodeLiteral("L'\\0'", &out, &wide));
  EXPECT_EQ(std::string(1, '\0'), out);
  EXPECT_TRUE(wide);
}

TEST(LexerTest, KeywordSet) {
  EXPECT_TRUE(IsCKeyword("sizeof"));
  EXPECT_TRUE(IsCKeyword("while"));
  EXPECT_FALSE(IsCKeyword("memcpy"));
  EXPECT_FALSE(IsCKeyword("size_t"));
}

}  // namespace
}  // namespace viperkit::frontend
