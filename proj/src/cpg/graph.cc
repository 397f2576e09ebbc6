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

#include "viperkit/cpg/graph.h"

#include <string>

namespace viperkit::cpg {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kWF: return "WF";
    case NodeKind::kRF: return "RF";
    case NodeKind::kCF: return "CF";
    case NodeKind::kAF: return "AF";
    case NodeKind::kAD: return "AD";
    case NodeKind::kFree: return "FREE";
    case NodeKind::kCond: return "COND";
    case NodeKind::kAssign: return "ASSIGN";
    case NodeKind::kDecl: return "DECL";
    case NodeKind::kCall: return "CALL";
    case NodeKind::kRet: return "RET";
    case NodeKind::kEntry: return "ENTRY";
    case NodeKind::kExit: return "EXIT";
    case NodeKind::kVar: return "VAR";
  }
  return "?";
}

std::string_view EdgeKindName(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kDD: return "DD";
    case EdgeKind::kCD: return "CD";
    case EdgeKind::kPD: return "PD";
    case EdgeKind::kDef: return "DEF";
    case EdgeKind::kUse: return "USE";
  }
  return "?";
}

std::string_view PropertyKeyName(PropertyKey key) {
  switch (key) {
    case PropertyKey::kType: return "type";
    case PropertyKey::kLine: return "line";
    case PropertyKey::kCode: return "code";
    case PropertyKey::kVar: return "var";
    case PropertyKey::kLen: return "len";
    case PropertyKey::kArgDest: return "arg_dest";
    case PropertyKey::kArgSrc: return "arg_src";
    case PropertyKey::kArgCount: return "arg_count";
    case PropertyKey::kArgIndex: return "arg_index";
    case PropertyKey::kCallee: return "callee";
    case PropertyKey::kApiClass: return "api_class";
    case PropertyKey::kBranch: return "branch";
  }
  return "?";
}

std::string_view BranchName(Branch b) {
  switch (b) {
    case Branch::kNone: return "none";
    case Branch::kTrue: return "true";
    case Branch::kFalse: return "false";
  }
  return "?";
}

std::string PropertyValueString(const PropertyValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<ConstValue>(v).ToString();
}

PropertyGraph::PropertyGraph(std::shared_ptr<const frontend::Ast> ast,
                             frontend::AstId function, SizeofModel sizes)
    : ast_(std::move(ast)), function_(function), sizes_(std::move(sizes)) {
  if (function_ != frontend::kNoNode) function_name_ = ast_->node(function_).text;
}

const GraphNode& PropertyGraph::node(NodeId id) const {
  if (id >= nodes_.size()) throw UnknownTarget("no node " + std::to_string(id));
  return nodes_[id];
}

const GraphEdge& PropertyGraph::edge(EdgeId id) const {
  if (id >= edges_.size()) throw UnknownTarget("no edge " + std::to_string(id));
  return edges_[id];
}

NodeId PropertyGraph::AddNode(GraphNode node) {
  node.id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(std::move(node));
  out_edges_.emplace_back();
  in_edges_.emplace_back();
  cfg_succ_.emplace_back();
  cfg_pred_.emplace_back();
  return nodes_.back().id;
}

EdgeId PropertyGraph::AddEdge(NodeId src, NodeId dst, EdgeKind kind) {
  node(src);
  node(dst);
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(GraphEdge{id, src, dst, kind});
  out_edges_[src].push_back(id);
  in_edges_[dst].push_back(id);
  return id;
}

void PropertyGraph::AddCfgEdge(NodeId from, NodeId to, Branch branch) {
  cfg_succ_.at(from).push_back(CfgEdge{to, branch});
  cfg_pred_.at(to).push_back(CfgEdge{from, branch});
}

void PropertyGraph::SetEntryExit(NodeId entry, NodeId exit) {
  entry_ = entry;
  exit_ = exit;
}

std::vector<EdgeId> PropertyGraph::InEdges(NodeId id, EdgeKind kind) const {
  std::vector<EdgeId> out;
  for (EdgeId e : in_edges_.at(id)) {
    if (edges_[e].kind == kind) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> PropertyGraph::OutEdges(NodeId id, EdgeKind kind) const {
  std::vector<EdgeId> out;
  for (EdgeId e : out_edges_.at(id)) {
    if (edges_[e].kind == kind) out.push_back(e);
  }
  return out;
}

void PropertyGraph::CheckTarget(Target target) const {
  if (target.type == Target::Type::kNode) {
    node(target.id);
  } else {
    edge(target.id);
  }
}

std::optional<PropertyValue> PropertyGraph::Get(Target target, PropertyKey key) const {
  CheckTarget(target);
  auto it = properties_.find({target, key});
  if (it == properties_.end()) return std::nullopt;
  return it->second;
}

void PropertyGraph::Set(Target target, PropertyKey key, PropertyValue value) {
  CheckTarget(target);
  properties_[{target, key}] = std::move(value);
}

std::optional<std::string> PropertyGraph::GetString(Target target, PropertyKey key) const {
  std::optional<PropertyValue> v = Get(target, key);
  if (!v) return std::nullopt;
  if (const auto* s = std::get_if<std::string>(&*v)) return *s;
  return std::nullopt;
}

std::optional<ConstValue> PropertyGraph::GetConst(Target target, PropertyKey key) const {
  std::optional<PropertyValue> v = Get(target, key);
  if (!v) return std::nullopt;
  if (const auto* c = std::get_if<ConstValue>(&*v)) return *c;
  return std::nullopt;
}

std::uint64_t PropertyGraph::Fingerprint() const {
  // FNV-1a over a canonical rendering.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (const GraphNode& n : nodes_) {
    mix(NodeKindName(n.kind));
    mix(std::to_string(n.line));
    mix(n.var);
  }
  for (const GraphEdge& e : edges_) {
    mix(std::to_string(e.src) + ">" + std::to_string(e.dst));
    mix(EdgeKindName(e.kind));
  }
  for (const auto& [k, v] : properties_) {
    mix(k.first.type == Target::Type::kNode ? "n" : "e");
    mix(std::to_string(k.first.id));
    mix(PropertyKeyName(k.second));
    mix(PropertyValueString(v));
  }
  return h;
}

std::optional<NodeId> PropertyGraph::VarNode(std::string_view name) const {
  for (const GraphNode& n : nodes_) {
    if (n.kind == NodeKind::kVar && n.var == name) return n.id;
  }
  return std::nullopt;
}

}  // namespace viperkit::cpg
