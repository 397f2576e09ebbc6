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

#include "viperkit/frontend/edits.h"

#include <algorithm>

namespace viperkit::frontend {

EditScript& EditScript::ReplaceLine(int line, std::string text) {
  edits_.push_back(Edit{Edit::Kind::kReplaceLine, line, 0, 0, std::move(text)});
  return *this;
}

EditScript& EditScript::InsertBefore(int line, std::string text) {
  edits_.push_back(Edit{Edit::Kind::kInsertBefore, line, 0, 0, std::move(text)});
  return *this;
}

EditScript& EditScript::ReplaceSpan(std::size_t begin, std::size_t end,
                                    std::string text) {
  edits_.push_back(Edit{Edit::Kind::kReplaceSpan, 0, begin, end, std::move(text)});
  return *this;
}

EditScript& EditScript::DeleteLine(int line) {
  edits_.push_back(Edit{Edit::Kind::kDeleteLine, line, 0, 0, {}});
  return *this;
}

EditScript& EditScript::Append(const EditScript& other) {
  edits_.insert(edits_.end(), other.edits_.begin(), other.edits_.end());
  return *this;
}

int CountLines(std::string_view source) {
  if (source.empty()) return 0;
  int n = static_cast<int>(std::count(source.begin(), source.end(), '\n'));
  return source.back() == '\n' ? n : n + 1;
}

std::vector<std::size_t> LineOffsets(std::string_view source) {
  std::vector<std::size_t> offsets;
  if (source.empty()) return offsets;
  offsets.push_back(0);
  for (std::size_t i = 0; i + 1 < source.size(); ++i) {
    if (source[i] == '\n') offsets.push_back(i + 1);
  }
  return offsets;
}

namespace {

struct Range {
  std::size_t begin;
  std::size_t end;
  std::string text;
  bool deletes_line;
  std::size_t order;
};

std::string IndentOf(std::string_view line) {
  std::size_t n = 0;
  while (n < line.size() && (line[n] == ' ' || line[n] == '\t')) ++n;
  return std::string(line.substr(0, n));
}

std::vector<Range> Resolve(std::string_view source, const EditScript& script) {
  std::vector<std::size_t> offsets = LineOffsets(source);
  int lines = static_cast<int>(offsets.size());
  auto line_end = [&](int line) {
    std::size_t e = line < lines ? offsets[line] - 1 : source.size();
    if (line == lines && !source.empty() && source.back() == '\n') e = source.size() - 1;
    return e;
  };
  std::vector<Range> out;
  std::size_t order = 0;
  for (const Edit& e : script.edits()) {
    if (e.kind == Edit::Kind::kReplaceSpan) {
      if (e.begin > e.end || e.end > source.size()) {
        throw OutOfBoundsError("span [" + std::to_string(e.begin) + ", " +
                               std::to_string(e.end) + ") outside source of " +
                               std::to_string(source.size()) + " bytes");
      }
      out.push_back(Range{e.begin, e.end, e.text, false, order++});
      continue;
    }
    if (e.line < 1 || e.line > lines) {
      throw OutOfBoundsError("line " + std::to_string(e.line) + " outside 1.." +
                             std::to_string(lines));
    }
    std::size_t begin = offsets[e.line - 1];
    std::size_t end = line_end(e.line);
    switch (e.kind) {
      case Edit::Kind::kReplaceLine:
        out.push_back(Range{begin, end, e.text, false, order++});
        break;
      case Edit::Kind::kInsertBefore: {
        std::string indent = IndentOf(source.substr(begin, end - begin));
        std::string text;
        std::size_t pos = 0;
        while (pos <= e.text.size()) {
          std::size_t nl = e.text.find('\n', pos);
          if (nl == std::string::npos) nl = e.text.size();
          text += indent;
          text.append(e.text, pos, nl - pos);
          text += '\n';
          pos = nl + 1;
        }
        out.push_back(Range{begin, begin, std::move(text), false, order++});
        break;
      }
      case Edit::Kind::kDeleteLine:
        out.push_back(Range{begin, std::min(end + 1, source.size()), {}, true, order++});
        break;
      case Edit::Kind::kReplaceSpan:
        break;
    }
  }
  // Insertions sort ahead of a replacement starting at the same byte.
  std::stable_sort(out.begin(), out.end(), [](const Range& a, const Range& b) {
    if (a.begin != b.begin) return a.begin < b.begin;
    return (a.end == a.begin) && (b.end != b.begin);
  });
  for (std::size_t i = 1; i < out.size(); ++i) {
    const Range& prev = out[i - 1];
    const Range& cur = out[i];
    bool cur_empty = cur.begin == cur.end;
    if (cur.begin < prev.end && !(cur_empty && cur.begin == prev.begin)) {
      throw OverlapError("edits overlap at byte " + std::to_string(cur.begin));
    }
  }
  return out;
}

}  // namespace

EditResult ApplyEditsWithLineMap(std::string_view source, const EditScript& script) {
  std::vector<Range> ranges = Resolve(source, script);
  std::vector<std::size_t> offsets = LineOffsets(source);
  EditResult result;
  result.line_map.assign(offsets.size(), 0);
  std::string& out = result.text;
  out.reserve(source.size());
  int out_line = 1;
  std::size_t next_line = 0;  // index into offsets
  auto emit = [&](std::string_view text) {
    out_line += static_cast<int>(std::count(text.begin(), text.end(), '\n'));
    out.append(text);
  };
  // Copies source[from, to) recording where each old line start lands.
  auto copy = [&](std::size_t from, std::size_t to) {
    while (next_line < offsets.size() && offsets[next_line] < to) {
      if (offsets[next_line] >= from) {
        emit(source.substr(from, offsets[next_line] - from));
        from = offsets[next_line];
        result.line_map[next_line] = out_line;
      }
      ++next_line;
    }
    emit(source.substr(from, to - from));
  };
  std::size_t pos = 0;
  for (const Range& r : ranges) {
    copy(pos, r.begin);
    pos = std::max(pos, r.begin);
    int replacement_line = out_line;
    emit(r.text);
    while (next_line < offsets.size() && offsets[next_line] < r.end) {
      if (offsets[next_line] >= r.begin) {
        result.line_map[next_line] = r.deletes_line ? 0 : replacement_line;
      }
      ++next_line;
    }
    pos = std::max(pos, r.end);
  }
  copy(pos, source.size());
  return result;
}

std::string ApplyEdits(std::string_view source, const EditScript& script) {
  return ApplyEditsWithLineMap(source, script).text;
}

}  // namespace viperkit::frontend
