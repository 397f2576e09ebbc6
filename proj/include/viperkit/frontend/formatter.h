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

#ifndef VIPERKIT_FRONTEND_FORMATTER_H_
#define VIPERKIT_FRONTEND_FORMATTER_H_

#include <string>
#include <string_view>
#include <vector>

namespace viperkit::frontend {

struct FormatResult {
  std::string text;
  // line_map[old_line - 1] is the new line holding the first token that
  // started on old_line, or 0 for lines with no token start.
  std::vector<int> line_map;
};

// Re-lays out a translation unit: K&R braces, 4-space indentation, one
// statement per line, own-line comments. Only whitespace changes. Throws
// SyntaxError for input outside the parser's subset.
FormatResult NormalizeFormatting(std::string_view source);

}  // namespace viperkit::frontend

#endif  // VIPERKIT_FRONTEND_FORMATTER_H_
