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

#include <utility>

#include "viperkit/detect/detector.h"

namespace viperkit::detect {

using cpg::ConstValue;
using cpg::EdgeId;
using cpg::EdgeKind;
using cpg::GraphNode;
using cpg::NodeId;
using cpg::NodeKind;
using cpg::PropertyGraph;
using cpg::PropertyKey;
using cpg::Target;

namespace {

struct BufferDef {
  NodeId node;
  std::int64_t len;
};

// AD/AF definitions of `var` that reach `use` through DD edges, with a
// known length. Only allocation nodes count as definitions.
// Sets *unknown when an allocation of unknown length also reaches.
std::vector<BufferDef> ReachingBuffers(const PropertyGraph& g, NodeId use,
                                       const std::string& var, bool* unknown) {
  std::vector<BufferDef> out;
  for (EdgeId e : g.InEdges(use, EdgeKind::kDD)) {
    if (g.GetString(Target::Edge(e), PropertyKey::kVar) != var) continue;
    NodeId src = g.edge(e).src;
    NodeKind k = g.node(src).kind;
    if (k != NodeKind::kAD && k != NodeKind::kAF) continue;
    std::optional<ConstValue> len = g.GetConst(Target::Node(src), PropertyKey::kLen);
    if (len && len->known()) {
      out.push_back({src, len->value()});
    } else {
      *unknown = true;
    }
  }
  return out;
}

}  // namespace

std::vector<FeatureWitness> DetectOverflow(const PropertyGraph& g) {
  std::vector<FeatureWitness> out;
  for (const GraphNode& v : g.nodes()) {
    if (v.kind != NodeKind::kWF && v.kind != NodeKind::kCF) continue;
    Target t = Target::Node(v.id);
    std::optional<ConstValue> count = g.GetConst(t, PropertyKey::kArgCount);
    if (!count || !count->known()) continue;
    std::int64_t n = count->value();
    std::optional<std::string> dest = g.GetString(t, PropertyKey::kArgDest);
    std::optional<std::string> src = g.GetString(t, PropertyKey::kArgSrc);
    std::vector<BufferDef> dest_defs, src_defs;
    bool dest_unknown = false;
    bool src_unknown = false;
    if (dest) dest_defs = ReachingBuffers(g, v.id, *dest, &dest_unknown);
    if (src) src_defs = ReachingBuffers(g, v.id, *src, &src_unknown);

    auto base = [&](FeatureId f) {
      FeatureWitness w;
      w.feature = f;
      w.function = g.function_name();
      w.lines["use_line"] = v.line;
      w.constants["n"] = ConstValue::Of(n);
      return w;
    };

    for (const BufferDef& d : dest_defs) {
      auto with_dest = [&](FeatureId f) {
        FeatureWitness w = base(f);
        w.lines["def_line"] = g.node(d.node).line;
        w.vars["dest"] = *dest;
        w.constants["LEN_d"] = ConstValue::Of(d.len);
        return w;
      };
      if (OeHolds(d.len, n)) {
        out.push_back(with_dest(FeatureId::kOE));
        continue;
      }
      if (!IbsHolds(d.len, n)) continue;
      bool bsb = false;
      for (const BufferDef& s : src_defs) {
        if (!BsbHolds(d.len, s.len, n)) continue;
        FeatureWitness w = with_dest(FeatureId::kBSB);
        w.lines["src_def_line"] = g.node(s.node).line;
        w.vars["src"] = *src;
        w.constants["LEN_s"] = ConstValue::Of(s.len);
        out.push_back(std::move(w));
        bsb = true;
      }
      // IBS only when BSB is decidable, so losing a constant never turns
      // one witness into another.
      if (!bsb && !src_unknown) out.push_back(with_dest(FeatureId::kIBS));
    }

    for (const BufferDef& s : src_defs) {
      if (!BoHolds(s.len, n)) continue;
      FeatureWitness w = base(FeatureId::kBO);
      w.lines["src_def_line"] = g.node(s.node).line;
      w.vars["src"] = *src;
      w.constants["LEN_s"] = ConstValue::Of(s.len);
      if (dest) w.vars["dest"] = *dest;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace viperkit::detect
