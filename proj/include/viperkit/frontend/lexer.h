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

#ifndef VIPERKIT_FRONTEND_LEXER_H_
#define VIPERKIT_FRONTEND_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "viperkit/frontend/token.h"

namespace viperkit::frontend {

// Splits C source into tokens. Never fails: characters outside the C
// alphabet become kUnknown tokens and an unterminated comment or literal
// runs to end of input. The final token is always kEof.
TokenList Lex(std::string_view source);

// Significant (non-trivia, non-EOF) token spellings. Two sources are
// token-equivalent when these sequences are equal.
std::vector<std::string> SignificantTokens(std::string_view source);

bool IsCKeyword(std::string_view word);

// Decodes the body of a string or character literal spelling, e.g.
// `L"ab\n"`. Returns false when an escape is not understood.
bool DecodeLiteral(std::string_view spelling, std::string* out, bool* wide);

}  // namespace viperkit::frontend

#endif  // VIPERKIT_FRONTEND_LEXER_H_
