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

#include "viperkit/perturb/self_check.h"

#include <algorithm>

#include "viperkit/detect/detector.h"

namespace viperkit::perturb {

using detect::FeatureWitness;

namespace {

std::string Describe(const FeatureWitness& w) {
  return std::string(detect::FeatureName(w.feature)) + "@" + std::to_string(w.AnchorLine()) +
         " in " + w.function;
}

// Same feature, function, required lines and required vars. WA's callee is
// exempt: its FPP swaps the API.
bool SameAnchors(const FeatureWitness& a, const FeatureWitness& b) {
  if (a.feature != b.feature || a.function != b.function) return false;
  for (const std::string& k : detect::RequiredLines(a.feature)) {
    if (a.lines.at(k) != b.lines.at(k)) return false;
  }
  for (const std::string& k : detect::RequiredVars(a.feature)) {
    if (a.feature == detect::FeatureId::kWA && k == "callee") continue;
    if (a.vars.at(k) != b.vars.at(k)) return false;
  }
  return true;
}

std::vector<FeatureWitness> Normalized(std::vector<FeatureWitness> ws) {
  for (FeatureWitness& w : ws) w.sample_id.clear();
  std::sort(ws.begin(), ws.end(), detect::WitnessLess);
  return ws;
}

}  // namespace

FeatureWitness MapWitness(const FeatureWitness& w, const std::vector<int>& line_map,
                          const SymbolMap* symbols) {
  FeatureWitness out = w;
  for (auto& [key, line] : out.lines) {
    line = (line >= 1 && static_cast<std::size_t>(line) <= line_map.size()) ? line_map[line - 1]
                                                                              : 0;
  }
  if (symbols != nullptr) {
    out.function = symbols->Rename(out.function);
    for (auto& [key, var] : out.vars) var = symbols->Rename(var);
  }
  return out;
}

CheckResult SelfCheck(const std::vector<FeatureWitness>& parent_witnesses,
                      PerturbedVariant& variant, const cpg::SizeofModel& sizes,
                      std::span<const detect::FeatureId> enabled) {
  auto on = [&](const FeatureWitness& w) {
    return std::find(enabled.begin(), enabled.end(), w.feature) != enabled.end();
  };
  CheckResult r;
  detect::DetectionOutcome det =
      detect::DetectSource(variant.variant_id, variant.source, variant.vulnerable_lines, sizes);
  if (det.error) {
    r.ok = false;
    r.message = "variant does not analyze: " + *det.error;
    return r;
  }
  std::erase_if(det.witnesses, [&](const FeatureWitness& w) { return !on(w); });
  r.witnesses = det.witnesses;
  const SymbolMap* symbols = variant.symbols ? &*variant.symbols : nullptr;

  if (variant.kind == VariantKind::kFEP) {
    for (const FeatureWitness& w : det.witnesses) {
      if (w.feature == *variant.feature) {
        r.ok = false;
        r.message = "feature survives: " + Describe(w);
        return r;
      }
    }
    variant.partial = !det.witnesses.empty();
    variant.expected_label =
        variant.partial ? frontend::Label::kVulnerable : frontend::Label::kNonVulnerable;
    return r;
  }

  if (variant.kind == VariantKind::kFPP) {
    FeatureWitness want = MapWitness(*variant.target, variant.line_map, symbols);
    for (const FeatureWitness& w : det.witnesses) {
      if (SameAnchors(want, w)) return r;
    }
    r.ok = false;
    r.message = "feature lost: " + Describe(want);
    return r;
  }

  std::vector<FeatureWitness> want;
  for (const FeatureWitness& w : parent_witnesses) {
    if (on(w)) want.push_back(MapWitness(w, variant.line_map, symbols));
  }
  want = Normalized(std::move(want));
  std::vector<FeatureWitness> got = Normalized(det.witnesses);
  if (want == got) return r;
  r.ok = false;
  std::vector<FeatureWitness> missing, extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                      std::back_inserter(missing), detect::WitnessLess);
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra),
                      detect::WitnessLess);
  r.message = "witness set changed:";
  for (const FeatureWitness& w : missing) r.message += " -" + Describe(w);
  for (const FeatureWitness& w : extra) r.message += " +" + Describe(w);
  return r;
}

}  // namespace viperkit::perturb
