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

#ifndef VIPERKIT_CPG_DOT_H_
#define VIPERKIT_CPG_DOT_H_

#include <string>

#include "viperkit/cpg/graph.h"

namespace viperkit::cpg {

// Graphviz rendering of the DD/CD/PD edges plus DEF/USE (dashed). Node and
// edge order follow ids, so equal graphs print identically.
std::string ToDot(const PropertyGraph& g);

}  // namespace viperkit::cpg

#endif  // VIPERKIT_CPG_DOT_H_
