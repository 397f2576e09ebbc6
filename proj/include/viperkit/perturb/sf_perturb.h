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

#ifndef VIPERKIT_PERTURB_SF_PERTURB_H_
#define VIPERKIT_PERTURB_SF_PERTURB_H_

#include <string>
#include <utility>

#include "viperkit/frontend/ast.h"
#include "viperkit/frontend/sample.h"
#include "viperkit/perturb/variant.h"

namespace viperkit::perturb {

// printf(""); as the first statement of every function body.
PerturbedVariant GenSfNodeSet(const frontend::CodeSample& sample);

// if(0==1) return; (return 0; in non-void functions) as the first
// statement of every function body.
PerturbedVariant GenSfEdgeSet(const frontend::CodeSample& sample);

// Renames user variables to VARk and user functions to FUNk in order of
// first occurrence. Library, API and #define names, `main`, keywords and
// literals are kept.
std::pair<PerturbedVariant, SymbolMap> GenSfIdentifier(const frontend::CodeSample& sample);

SymbolMap BuildSymbolMap(const frontend::Ast& ast);
std::string ApplySymbolMap(const frontend::Ast& ast, const SymbolMap& map);

// True for names symbolization never touches.
bool IsReservedName(std::string_view name);

struct FormattingVariant {
  PerturbedVariant variant;
  // The sample was already in canonical layout; callers drop the variant.
  bool noop = false;
};

FormattingVariant GenSfFormatting(const frontend::CodeSample& sample);

}  // namespace viperkit::perturb

#endif  // VIPERKIT_PERTURB_SF_PERTURB_H_
