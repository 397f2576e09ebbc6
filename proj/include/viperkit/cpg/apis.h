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

#ifndef VIPERKIT_CPG_APIS_H_
#define VIPERKIT_CPG_APIS_H_

#include <optional>
#include <string_view>

namespace viperkit::cpg {

enum class ApiClass { kNone, kWrite, kRead, kCopy, kAlloc, kFree };

std::string_view ApiClassName(ApiClass c);

// Write: memcpy strncpy strcpy wcsncpy memset wmemset.
// Read: fgets getch gets getchar fgetc.
// Copy: memmove wmemcpy wmemmove strncat wcsncat.
// Alloc: malloc calloc alloca.
ApiClass ClassifyCallee(std::string_view callee);

bool IsWriteApi(std::string_view callee);
bool IsReadApi(std::string_view callee);

// Argument positions for buffer APIs; nullopt when the API has none.
std::optional<int> DestArgIndex(std::string_view callee);
std::optional<int> SrcArgIndex(std::string_view callee);
std::optional<int> CountArgIndex(std::string_view callee);

// True for APIs whose count argument is in wide characters.
bool CountsWideChars(std::string_view callee);

// Names that are never program variables (library objects and constants).
bool IsLibraryName(std::string_view name);

}  // namespace viperkit::cpg

#endif  // VIPERKIT_CPG_APIS_H_
