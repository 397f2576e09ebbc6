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

#include "viperkit/cpg/dot.h"

#include <sstream>

namespace viperkit::cpg {
namespace {

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace

std::string ToDot(const PropertyGraph& g) {
  std::ostringstream out;
  out << "digraph \"" << Escape(g.function_name()) << "\" {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const GraphNode& n : g.nodes()) {
    Target t = Target::Node(n.id);
    std::string label(NodeKindName(n.kind));
    if (n.kind != NodeKind::kVar) label += " @" + std::to_string(n.line);
    if (auto code = g.GetString(t, PropertyKey::kCode); code && !code->empty()) {
      label += ": " + *code;
    }
    if (auto len = g.GetConst(t, PropertyKey::kLen)) label += " [len=" + len->ToString() + "]";
    if (auto count = g.GetConst(t, PropertyKey::kArgCount)) {
      label += " [count=" + count->ToString() + "]";
    }
    out << "  n" << n.id << " [label=\"" << Escape(label) << "\"";
    if (n.kind == NodeKind::kVar) out << ", shape=ellipse";
    out << "];\n";
  }
  for (const GraphEdge& e : g.edges()) {
    out << "  n" << e.src << " -> n" << e.dst << " [label=\"" << EdgeKindName(e.kind);
    Target t = Target::Edge(e.id);
    if (auto var = g.GetString(t, PropertyKey::kVar); var && e.kind == EdgeKind::kDD) {
      out << ":" << Escape(*var);
    }
    if (auto b = g.GetString(t, PropertyKey::kBranch); b && *b != "none") {
      out << ":" << *b;
    }
    out << "\"";
    if (e.kind == EdgeKind::kDef || e.kind == EdgeKind::kUse) out << ", style=dashed";
    if (e.kind == EdgeKind::kPD) out << ", style=dotted";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace viperkit::cpg
