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

#ifndef VIPERKIT_FRONTEND_ANNOTATIONS_H_
#define VIPERKIT_FRONTEND_ANNOTATIONS_H_

#include <string>
#include <string_view>
#include <vector>

namespace viperkit::frontend {

enum class AnnotationKind { kFlaw, kPotentialFlaw, kFix };

std::string_view AnnotationKindName(AnnotationKind kind);

struct SardAnnotation {
  AnnotationKind kind;
  // Line of the first code token after the comment, or the comment's last
  // line when nothing follows it.
  int line;
  std::string text;
};

// Scans block and line comments for the FLAW / POTENTIAL FLAW / FIX
// prefixes. Matching is case-sensitive after leading whitespace.
std::vector<SardAnnotation> ExtractAnnotations(std::string_view source);

}  // namespace viperkit::frontend

#endif  // VIPERKIT_FRONTEND_ANNOTATIONS_H_
