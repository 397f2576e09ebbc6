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

#ifndef VIPERKIT_EVAL_REPORT_H_
#define VIPERKIT_EVAL_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "viperkit/eval/metrics.h"

namespace viperkit::eval {

inline constexpr int kReportSchemaVersion = 1;

struct DetectorReport {
  std::string detector_id;
  Percent fpp_reference_mean;
  std::vector<SatisfactionResult> rows;  // VF rows in feature order, then SF rows
  std::vector<Category> categories;      // parallel to rows
  AccuracyDelta accuracy;
  friend bool operator==(const DetectorReport&, const DetectorReport&) = default;
};

struct CorpusSummary {
  std::int64_t samples = 0;
  std::int64_t variants = 0;
  std::vector<std::string> skipped_samples;
  std::vector<std::string> disabled_rules;
  friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

struct EvaluationReport {
  int schema_version = kReportSchemaVersion;
  Thresholds thresholds;
  CorpusSummary corpus;
  std::vector<DetectorReport> detectors;
  friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

struct EvaluationInput {
  std::vector<Truth> originals;  // every corpus sample with its label
  std::vector<perturb::PerturbedVariant> variants;
  std::vector<detect::FeatureId> features = {detect::kAllFeatures.begin(),
                                             detect::kAllFeatures.end()};
  std::vector<perturb::VariantKind> sf_kinds = {perturb::kSfKinds.begin(),
                                                perturb::kSfKinds.end()};
};

struct EvaluationOptions {
  Thresholds thresholds;
  // Defaults to the detector's own mean SR_FPP over the VF rows.
  std::optional<Rational> fpp_reference_mean;
  SatisfactionOptions satisfaction;
};

// Throws MissingPrediction listing every id the detector did not label.
DetectorReport EvaluateDetector(const EvaluationInput& input, const PredictionSet& predictions,
                                const EvaluationOptions& options = {});

// Rationals are stored as "p/q" strings so the report parses back exactly;
// two-decimal renderings sit next to them for readers.
nlohmann::json ReportToJson(const EvaluationReport& report);
EvaluationReport ReportFromJson(const nlohmann::json& j);

// Plain-text table per detector: one row per feature and SF kind with
// T_FPP T'_FPP SR_FPP T_FEP T'_FEP SR_FEP SR_f and the category.
std::string RenderTable(const EvaluationReport& report);

}  // namespace viperkit::eval

#endif  // VIPERKIT_EVAL_REPORT_H_
