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

#include "viperkit/detect/validate.h"

#include <cstdlib>

namespace viperkit::detect {

namespace {

bool Near(int a, int b) { return std::abs(a - b) <= kLineTolerance; }

}  // namespace

ValidationReport ValidateAgainstSard(const std::vector<SardInput>& inputs) {
  ValidationReport report;
  for (const SardInput& in : inputs) {
    if (in.sard.empty()) continue;
    SampleValidation v;
    v.sample_id = in.annotated.sample_id;
    std::vector<int> flaw_like;
    for (const frontend::SardAnnotation& s : in.sard) {
      if (s.kind == frontend::AnnotationKind::kFix) continue;
      flaw_like.push_back(s.line);
      if (s.kind == frontend::AnnotationKind::kFlaw) v.flaw_lines.push_back(s.line);
    }
    std::vector<int> all_anchors;
    for (const FeatureWitness& w : in.annotated.witnesses) {
      int anchor = w.AnchorLine();
      v.witness_lines.push_back(anchor);
      for (const auto& [name, line] : w.lines) all_anchors.push_back(line);
      bool matched = false;
      for (int l : flaw_like) matched = matched || Near(anchor, l);
      if (!matched) {
        v.disagreements.push_back(std::string(FeatureName(w.feature)) + " witness at line " +
                                  std::to_string(anchor) + " has no FLAW annotation");
      }
    }
    for (int l : v.flaw_lines) {
      bool covered = false;
      for (int a : all_anchors) covered = covered || Near(a, l);
      if (!covered) {
        v.disagreements.push_back("FLAW at line " + std::to_string(l) +
                                  " has no detected feature");
      }
    }
    v.agree = v.disagreements.empty();
    ++report.compared;
    if (v.agree) ++report.agreed;
    report.samples.push_back(std::move(v));
  }
  if (report.compared > 0) {
    report.agreement_rate = boost::rational<std::int64_t>(report.agreed, report.compared);
  }
  return report;
}

nlohmann::json ValidationToJson(const ValidationReport& report) {
  nlohmann::json samples = nlohmann::json::array();
  for (const SampleValidation& s : report.samples) {
    samples.push_back({{"sample_id", s.sample_id},
                       {"agree", s.agree},
                       {"flaw_lines", s.flaw_lines},
                       {"witness_lines", s.witness_lines},
                       {"disagreements", s.disagreements}});
  }
  nlohmann::json rate = nullptr;
  if (report.agreement_rate) {
    rate = std::to_string(report.agreement_rate->numerator()) + "/" +
           std::to_string(report.agreement_rate->denominator());
  }
  return {{"compared", report.compared},
          {"agreed", report.agreed},
          {"agreement_rate", rate},
          {"samples", samples}};
}

}  // namespace viperkit::detect
