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

#include "viperkit/cpg/apis.h"

#include <array>

namespace viperkit::cpg {

namespace {

constexpr std::array<std::string_view, 6> kWrite = {"memcpy", "strncpy", "strcpy",
                                                    "wcsncpy", "memset", "wmemset"};
constexpr std::array<std::string_view, 5> kRead = {"fgets", "getch", "gets", "getchar",
                                                   "fgetc"};
constexpr std::array<std::string_view, 5> kCopy = {"memmove", "wmemcpy", "wmemmove",
                                                   "strncat", "wcsncat"};
constexpr std::array<std::string_view, 3> kAlloc = {"malloc", "calloc", "alloca"};

template <std::size_t N>
bool Contains(const std::array<std::string_view, N>& list, std::string_view name) {
  for (std::string_view s : list) {
    if (s == name) return true;
  }
  return false;
}

}  // namespace

std::string_view ApiClassName(ApiClass c) {
  switch (c) {
    case ApiClass::kNone:
      return "none";
    case ApiClass::kWrite:
      return "write";
    case ApiClass::kRead:
      return "read";
    case ApiClass::kCopy:
      return "copy";
    case ApiClass::kAlloc:
      return "alloc";
    case ApiClass::kFree:
      return "free";
  }
  return "none";
}

ApiClass ClassifyCallee(std::string_view callee) {
  if (Contains(kWrite, callee)) return ApiClass::kWrite;
  if (Contains(kRead, callee)) return ApiClass::kRead;
  if (Contains(kCopy, callee)) return ApiClass::kCopy;
  if (Contains(kAlloc, callee)) return ApiClass::kAlloc;
  if (callee == "free") return ApiClass::kFree;
  return ApiClass::kNone;
}

bool IsWriteApi(std::string_view callee) { return Contains(kWrite, callee); }
bool IsReadApi(std::string_view callee) { return Contains(kRead, callee); }

std::optional<int> DestArgIndex(std::string_view callee) {
  if (Contains(kWrite, callee) || Contains(kCopy, callee)) return 0;
  if (callee == "fgets" || callee == "gets" || callee == "free") return 0;
  return std::nullopt;
}

std::optional<int> SrcArgIndex(std::string_view callee) {
  if (callee == "memset" || callee == "wmemset") return std::nullopt;
  if (Contains(kWrite, callee) || Contains(kCopy, callee)) return 1;
  return std::nullopt;
}

std::optional<int> CountArgIndex(std::string_view callee) {
  if (callee == "strcpy") return std::nullopt;
  if (Contains(kWrite, callee) || Contains(kCopy, callee)) return 2;
  return std::nullopt;
}

bool CountsWideChars(std::string_view callee) {
  return callee == "wcsncpy" || callee == "wmemset" || callee == "wmemcpy" ||
         callee == "wmemmove" || callee == "wcsncat";
}

bool IsLibraryName(std::string_view name) {
  return name == "NULL" || name == "stdin" || name == "stdout" || name == "stderr" ||
         name == "EOF" || name == "true" || name == "false" || name == "errno";
}

}  // namespace viperkit::cpg
