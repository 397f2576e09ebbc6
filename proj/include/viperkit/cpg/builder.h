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

#ifndef VIPERKIT_CPG_BUILDER_H_
#define VIPERKIT_CPG_BUILDER_H_

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "viperkit/cpg/const_eval.h"
#include "viperkit/cpg/graph.h"
#include "viperkit/frontend/ast.h"

namespace viperkit::cpg {

class UnsupportedConstruct : public std::runtime_error {
 public:
  UnsupportedConstruct(frontend::AstId node, int line, const std::string& what);
  frontend::AstId node() const { return node_; }
  int line() const { return line_; }

 private:
  frontend::AstId node_;
  int line_;
};

// Builds the graph of one function definition.
PropertyGraph BuildCpg(std::shared_ptr<const frontend::Ast> ast, frontend::AstId function,
                       const SizeofModel& sizes = SizeofModel());

// One graph per function definition, in source order.
std::vector<PropertyGraph> BuildAllCpgs(std::shared_ptr<const frontend::Ast> ast,
                                        const SizeofModel& sizes = SizeofModel());

// Evaluation context whose sizeof(variable) lookup sees the graph's
// function parameters, locals and the translation unit's globals.
EvalContext MakeEvalContext(const PropertyGraph& g);

// LEN in bytes for AD and AF nodes; UNKNOWN otherwise.
ConstValue BufferLenBytes(NodeId node, const PropertyGraph& g);

// Strips casts (and nothing else) from an expression.
frontend::AstId StripCasts(const frontend::Ast& ast, frontend::AstId id);

// Name of the identifier an expression denotes once casts are stripped, or
// the empty string.
std::string BaseIdentifier(const frontend::Ast& ast, frontend::AstId id);

// Variables defined and used by a CFG node, as recorded by DEF/USE edges.
std::set<std::string> NodeDefs(const PropertyGraph& g, NodeId node);
std::set<std::string> NodeUses(const PropertyGraph& g, NodeId node);

// Immediate post-dominator per node as recorded by PD edges.
std::vector<NodeId> ImmediatePostDominators(const PropertyGraph& g);

}  // namespace viperkit::cpg

#endif  // VIPERKIT_CPG_BUILDER_H_
