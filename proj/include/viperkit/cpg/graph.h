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

#ifndef VIPERKIT_CPG_GRAPH_H_
#define VIPERKIT_CPG_GRAPH_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "viperkit/cpg/const_eval.h"
#include "viperkit/frontend/ast.h"

namespace viperkit::cpg {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr NodeId kNoGraphNode = UINT32_MAX;

// kVar nodes stand for a function-local variable; DEF and USE edges point
// at them.
enum class NodeKind : std::uint8_t {
  kWF, kRF, kCF, kAF, kAD, kFree, kCond, kAssign, kDecl, kCall, kRet,
  kEntry, kExit, kVar,
};

enum class EdgeKind : std::uint8_t { kDD, kCD, kPD, kDef, kUse };

enum class PropertyKey : std::uint8_t {
  kType, kLine, kCode, kVar, kLen, kArgDest, kArgSrc, kArgCount, kArgIndex,
  kCallee, kApiClass, kBranch,
};

// Branch of a CFG edge leaving a condition.
enum class Branch : std::uint8_t { kNone, kTrue, kFalse };

std::string_view NodeKindName(NodeKind kind);
std::string_view EdgeKindName(EdgeKind kind);
std::string_view PropertyKeyName(PropertyKey key);
std::string_view BranchName(Branch b);

using PropertyValue = std::variant<std::string, std::int64_t, ConstValue>;

std::string PropertyValueString(const PropertyValue& v);

struct Target {
  enum class Type : std::uint8_t { kNode, kEdge };
  Type type;
  std::uint32_t id;

  static Target Node(NodeId id) { return {Type::kNode, id}; }
  static Target Edge(EdgeId id) { return {Type::kEdge, id}; }
  auto operator<=>(const Target&) const = default;
};

class UnknownTarget : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct GraphNode {
  NodeId id = 0;
  NodeKind kind = NodeKind::kDecl;
  int line = 0;
  // Statement the node was built from (ExprStmt, DeclStmt, Return, If,
  // While, For); kNoNode for ENTRY/EXIT/VAR.
  frontend::AstId stmt = frontend::kNoNode;
  // Declarator for declaration nodes.
  frontend::AstId decl = frontend::kNoNode;
  // Evaluated expression: statement expression, condition, for init/step.
  frontend::AstId expr = frontend::kNoNode;
  // Outermost call that determined the node kind.
  frontend::AstId call = frontend::kNoNode;
  // Variable name for kVar nodes.
  std::string var;
};

struct GraphEdge {
  EdgeId id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  EdgeKind kind = EdgeKind::kDD;
};

struct CfgEdge {
  NodeId to;
  Branch branch;
  friend bool operator==(const CfgEdge&, const CfgEdge&) = default;
};

// Abridged code property graph of one function. The statement-level CFG is
// kept as auxiliary adjacency; it is not part of the edge set.
class PropertyGraph {
 public:
  PropertyGraph() = default;
  PropertyGraph(std::shared_ptr<const frontend::Ast> ast, frontend::AstId function,
                SizeofModel sizes);

  const frontend::Ast& ast() const { return *ast_; }
  std::shared_ptr<const frontend::Ast> shared_ast() const { return ast_; }
  frontend::AstId function() const { return function_; }
  const std::string& function_name() const { return function_name_; }
  const SizeofModel& sizes() const { return sizes_; }

  const std::vector<GraphNode>& nodes() const { return nodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphNode& node(NodeId id) const;
  const GraphEdge& edge(EdgeId id) const;
  NodeId entry() const { return entry_; }
  NodeId exit() const { return exit_; }

  NodeId AddNode(GraphNode node);
  EdgeId AddEdge(NodeId src, NodeId dst, EdgeKind kind);
  void AddCfgEdge(NodeId from, NodeId to, Branch branch);
  void SetEntryExit(NodeId entry, NodeId exit);

  const std::vector<CfgEdge>& CfgSuccessors(NodeId id) const { return cfg_succ_.at(id); }
  const std::vector<CfgEdge>& CfgPredecessors(NodeId id) const { return cfg_pred_.at(id); }

  std::vector<EdgeId> InEdges(NodeId id, EdgeKind kind) const;
  std::vector<EdgeId> OutEdges(NodeId id, EdgeKind kind) const;

  // The property function. Get returns nullopt (ABSENT) for unset keys and
  // throws UnknownTarget for ids outside the graph.
  std::optional<PropertyValue> Get(Target target, PropertyKey key) const;
  void Set(Target target, PropertyKey key, PropertyValue value);

  // Convenience accessors; nullopt when absent or of another type.
  std::optional<std::string> GetString(Target target, PropertyKey key) const;
  std::optional<ConstValue> GetConst(Target target, PropertyKey key) const;

  // Deep, independent copy.
  PropertyGraph Clone() const { return *this; }

  // Stable digest of nodes, edges and properties.
  std::uint64_t Fingerprint() const;

  // Variable node for `name`, if any.
  std::optional<NodeId> VarNode(std::string_view name) const;

 private:
  void CheckTarget(Target target) const;

  std::shared_ptr<const frontend::Ast> ast_;
  frontend::AstId function_ = frontend::kNoNode;
  std::string function_name_;
  SizeofModel sizes_;
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<EdgeId>> out_edges_;
  std::vector<std::vector<EdgeId>> in_edges_;
  std::vector<std::vector<CfgEdge>> cfg_succ_;
  std::vector<std::vector<CfgEdge>> cfg_pred_;
  std::map<std::pair<Target, PropertyKey>, PropertyValue> properties_;
  NodeId entry_ = kNoGraphNode;
  NodeId exit_ = kNoGraphNode;
};

// Free-function spellings of the property function.
inline std::optional<PropertyValue> MuGet(const PropertyGraph& g, Target t, PropertyKey k) {
  return g.Get(t, k);
}
inline void MuSet(PropertyGraph& g, Target t, PropertyKey k, PropertyValue v) {
  g.Set(t, k, std::move(v));
}

}  // namespace viperkit::cpg

#endif  // VIPERKIT_CPG_GRAPH_H_
