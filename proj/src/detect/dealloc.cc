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

#include <deque>

#include "viperkit/cpg/builder.h"
#include "viperkit/detect/detector.h"

namespace viperkit::detect {

using cpg::CfgEdge;
using cpg::GraphNode;
using cpg::NodeId;
using cpg::NodeKind;
using cpg::PropertyGraph;
using cpg::PropertyKey;
using cpg::Target;

namespace {

bool FreesBuffer(const PropertyGraph& g, NodeId n, const std::string& b) {
  return g.node(n).kind == NodeKind::kFree &&
         g.GetString(Target::Node(n), PropertyKey::kArgDest) == b;
}

}  // namespace

std::vector<FeatureWitness> DetectDeallocatedUse(const PropertyGraph& g) {
  std::vector<FeatureWitness> out;
  for (const GraphNode& u : g.nodes()) {
    if (u.kind != NodeKind::kFree) continue;
    std::optional<std::string> b = g.GetString(Target::Node(u.id), PropertyKey::kArgDest);
    if (!b) continue;
    // Breadth-first over CFG successors; each node is visited once, so a
    // free inside a loop can reach itself.
    std::vector<bool> seen(g.nodes().size(), false);
    std::deque<NodeId> work;
    for (const CfgEdge& e : g.CfgSuccessors(u.id)) {
      if (!seen[e.to]) {
        seen[e.to] = true;
        work.push_back(e.to);
      }
    }
    while (!work.empty()) {
      NodeId w = work.front();
      work.pop_front();
      const GraphNode& wn = g.node(w);
      if (FreesBuffer(g, w, *b)) {
        FeatureWitness df;
        df.feature = FeatureId::kDF;
        df.function = g.function_name();
        df.lines["first_free_line"] = u.line;
        df.lines["second_free_line"] = wn.line;
        df.vars["buffer"] = *b;
        out.push_back(std::move(df));
        continue;
      }
      if (wn.kind != NodeKind::kFree && cpg::NodeUses(g, w).count(*b)) {
        FeatureWitness uaf;
        uaf.feature = FeatureId::kUAF;
        uaf.function = g.function_name();
        uaf.lines["dealloc_line"] = u.line;
        uaf.lines["use_line"] = wn.line;
        uaf.vars["buffer"] = *b;
        out.push_back(std::move(uaf));
      }
      if (cpg::NodeDefs(g, w).count(*b)) continue;
      for (const CfgEdge& e : g.CfgSuccessors(w)) {
        if (!seen[e.to]) {
          seen[e.to] = true;
          work.push_back(e.to);
        }
      }
    }
  }
  return out;
}

}  // namespace viperkit::detect
