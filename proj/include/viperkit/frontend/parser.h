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

#ifndef VIPERKIT_FRONTEND_PARSER_H_
#define VIPERKIT_FRONTEND_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "viperkit/frontend/ast.h"

namespace viperkit::frontend {

// Raised for input outside the supported C subset. The sample is excluded
// from analysis by callers; it is never fatal to a corpus run.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, const std::string& message);
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  std::string message_;
};

// Parses a translation unit written in the supported subset: scalar, array
// and pointer declarations, typedef pass-through, assignments, calls,
// if/else, for, while, return, break, continue, blocks, sizeof, casts, and
// integer/char/string literals. goto, switch, do, struct bodies, enums,
// function pointers and conditional compilation raise SyntaxError.
Ast Parse(std::string_view source);

// Parses a single expression, e.g. a #define replacement list.
Ast ParseExpression(std::string_view text);

}  // namespace viperkit::frontend

#endif  // VIPERKIT_FRONTEND_PARSER_H_
