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

#ifndef VIPERKIT_PIPELINE_COMMANDS_H_
#define VIPERKIT_PIPELINE_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "viperkit/detect/annotate.h"
#include "viperkit/detect/validate.h"
#include "viperkit/eval/reference.h"
#include "viperkit/eval/report.h"
#include "viperkit/frontend/sample.h"
#include "viperkit/perturb/variant.h"
#include "viperkit/pipeline/config.h"

namespace viperkit::pipeline {

// Layout under RunConfig::out.
inline constexpr const char* kAnnotationsFile = "annotations.jsonl";
inline constexpr const char* kDetectSummaryFile = "detect_summary.json";
inline constexpr const char* kValidationFile = "validation.json";
inline constexpr const char* kVariantsManifest = "variants.jsonl";
inline constexpr const char* kVariantsDir = "variants";
inline constexpr const char* kPerturbSummaryFile = "perturb_summary.json";
inline constexpr const char* kPredictionsDir = "predictions";
inline constexpr const char* kReportJson = "report.json";
inline constexpr const char* kReportText = "report.txt";

// ---- In-memory stages ----

struct DetectedSample {
  frontend::CodeSample sample;
  std::optional<std::string> error;  // unparseable or unsupported
  detect::AnnotatedSample annotated;
};

// Runs the enabled rules on every sample; order follows the input.
std::vector<DetectedSample> DetectCorpus(const std::vector<frontend::CodeSample>& samples,
                                         const RunConfig& config);

// Per-feature agreement of detected feature sets with CodeSample::features.
struct FeatureScore {
  detect::FeatureId feature;
  std::int64_t tp = 0, fp = 0, fn = 0;
  std::optional<eval::Rational> Precision() const;
  std::optional<eval::Rational> Recall() const;
};
std::vector<FeatureScore> ScoreDetection(const std::vector<DetectedSample>& detected,
                                         const RunConfig& config);

nlohmann::json DetectSummary(const std::vector<DetectedSample>& detected, const RunConfig& config);

detect::ValidationReport ValidateCorpus(const std::vector<DetectedSample>& detected);

struct PerturbOutcome {
  std::vector<perturb::PerturbedVariant> variants;  // passed the self-check
  std::vector<std::string> failures;                // failed the self-check
  std::vector<std::string> skipped;                 // uneditable recipes
  std::vector<std::string> skipped_samples;         // could not be analyzed
  std::int64_t formatting_noops = 0;
};

PerturbOutcome PerturbCorpus(const std::vector<DetectedSample>& detected, const RunConfig& config);
nlohmann::json PerturbSummary(const PerturbOutcome& outcome, const RunConfig& config);

// Labels every original and every variant.
eval::PredictionSet Predict(const eval::ReferenceDetector& detector,
                            const std::vector<frontend::CodeSample>& originals,
                            const std::vector<perturb::PerturbedVariant>& variants,
                            const RunConfig& config);

eval::EvaluationInput MakeEvaluationInput(const std::vector<frontend::CodeSample>& originals,
                                          const std::vector<perturb::PerturbedVariant>& variants,
                                          const RunConfig& config);
eval::EvaluationOptions MakeEvaluationOptions(const RunConfig& config);

// Corpus manifest: `corpus` itself, or corpus/manifest.jsonl for a directory.
std::filesystem::path ManifestPath(const std::filesystem::path& corpus);

// Annotations from out/annotations.jsonl when present, otherwise a fresh
// detection run.
std::vector<DetectedSample> LoadDetected(const RunConfig& config);

// ---- Subcommands: read and write files under config, return an exit code ----

int CmdGenCorpus(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdDetect(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdValidate(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdPerturb(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdPredict(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdEvaluate(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdReport(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace viperkit::pipeline

#endif  // VIPERKIT_PIPELINE_COMMANDS_H_
