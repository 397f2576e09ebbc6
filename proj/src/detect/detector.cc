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

#include <algorithm>

#include "viperkit/cpg/builder.h"
#include "viperkit/detect/detector.h"
#include "viperkit/frontend/parser.h"

namespace viperkit::detect {

using cpg::GraphNode;
using cpg::NodeKind;
using cpg::PropertyGraph;
using cpg::PropertyKey;
using cpg::Target;

std::vector<FeatureWitness> DetectSensitiveApi(const PropertyGraph& g,
                                               const std::set<int>& vulnerable_lines,
                                               const std::vector<FeatureWitness>& overflow) {
  std::vector<FeatureWitness> out;
  for (const GraphNode& v : g.nodes()) {
    if (v.kind == NodeKind::kVar || !vulnerable_lines.count(v.line)) continue;
    std::optional<std::string> cls = g.GetString(Target::Node(v.id), PropertyKey::kApiClass);
    if (!cls || (*cls != "read" && *cls != "write")) continue;
    FeatureId f = *cls == "read" ? FeatureId::kRA : FeatureId::kWA;
    if (f == FeatureId::kWA) {
      bool owned = std::any_of(overflow.begin(), overflow.end(), [&](const FeatureWitness& o) {
        return IsOverflowFeature(o.feature) && o.function == g.function_name() &&
               o.lines.at("use_line") == v.line;
      });
      if (owned) continue;
    }
    FeatureWitness w;
    w.feature = f;
    w.function = g.function_name();
    w.lines["call_line"] = v.line;
    w.vars["callee"] = *g.GetString(Target::Node(v.id), PropertyKey::kCallee);
    if (auto dest = g.GetString(Target::Node(v.id), PropertyKey::kArgDest)) {
      w.vars["dest"] = *dest;
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<FeatureWitness> DetectGraph(const PropertyGraph& g,
                                        const std::optional<std::set<int>>& vulnerable_lines) {
  std::vector<FeatureWitness> out = DetectOverflow(g);
  std::vector<FeatureWitness> more = DetectDeallocatedUse(g);
  out.insert(out.end(), more.begin(), more.end());
  more = DetectRangeCheck(g);
  out.insert(out.end(), more.begin(), more.end());
  if (vulnerable_lines) {
    more = DetectSensitiveApi(g, *vulnerable_lines, out);
    out.insert(out.end(), more.begin(), more.end());
  }
  std::sort(out.begin(), out.end(), WitnessLess);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DetectionOutcome DetectSource(const std::string& sample_id, const std::string& source,
                              const std::optional<std::set<int>>& vulnerable_lines,
                              const cpg::SizeofModel& sizes) {
  DetectionOutcome outcome;
  try {
    auto ast = std::make_shared<const frontend::Ast>(frontend::Parse(source));
    for (const PropertyGraph& g : cpg::BuildAllCpgs(ast, sizes)) {
      std::vector<FeatureWitness> w = DetectGraph(g, vulnerable_lines);
      outcome.witnesses.insert(outcome.witnesses.end(), w.begin(), w.end());
    }
  } catch (const frontend::SyntaxError& e) {
    outcome.witnesses.clear();
    outcome.error = "line " + std::to_string(e.line()) + ": " + e.message();
    return outcome;
  } catch (const cpg::UnsupportedConstruct& e) {
    outcome.witnesses.clear();
    outcome.error = e.what();
    return outcome;
  }
  for (FeatureWitness& w : outcome.witnesses) w.sample_id = sample_id;
  std::sort(outcome.witnesses.begin(), outcome.witnesses.end(), WitnessLess);
  return outcome;
}

}  // namespace viperkit::detect
