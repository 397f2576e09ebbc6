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

#ifndef VIPERKIT_FRONTEND_EDITS_H_
#define VIPERKIT_FRONTEND_EDITS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace viperkit::frontend {

class OverlapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfBoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edit {
  enum class Kind { kReplaceLine, kInsertBefore, kReplaceSpan, kDeleteLine };
  Kind kind;
  int line = 0;            // line edits, 1-based
  std::size_t begin = 0;   // kReplaceSpan byte range [begin, end)
  std::size_t end = 0;
  std::string text;
};

class EditScript {
 public:
  // Replaces the contents of `line` (not its newline) with `text`.
  EditScript& ReplaceLine(int line, std::string text);
  // Inserts `text` as new line(s) above `line`, indented like `line`.
  EditScript& InsertBefore(int line, std::string text);
  // Replaces bytes [begin, end); begin == end inserts.
  EditScript& ReplaceSpan(std::size_t begin, std::size_t end, std::string text);
  // Removes `line` together with its newline.
  EditScript& DeleteLine(int line);

  EditScript& Append(const EditScript& other);

  const std::vector<Edit>& edits() const { return edits_; }
  bool empty() const { return edits_.empty(); }

 private:
  std::vector<Edit> edits_;
};

struct EditResult {
  std::string text;
  // line_map[old_line - 1] is the new line of the old line's first byte,
  // or 0 when the line was deleted.
  std::vector<int> line_map;
};

EditResult ApplyEditsWithLineMap(std::string_view source, const EditScript& script);

std::string ApplyEdits(std::string_view source, const EditScript& script);

// Number of lines; a trailing newline does not start a new line.
int CountLines(std::string_view source);

// Byte offset of the first character of each line.
std::vector<std::size_t> LineOffsets(std::string_view source);

}  // namespace viperkit::frontend

#endif  // VIPERKIT_FRONTEND_EDITS_H_
