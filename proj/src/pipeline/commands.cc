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

#include "viperkit/pipeline/commands.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "viperkit/detect/detector.h"
#include "viperkit/frontend/annotations.h"
#include "viperkit/perturb/self_check.h"
#include "viperkit/perturb/sf_perturb.h"
#include "viperkit/perturb/vf_perturb.h"
#include "viperkit/pipeline/corpus_gen.h"
#include "viperkit/pipeline/parallel.h"

namespace viperkit::pipeline {

namespace fs = std::filesystem;
using detect::FeatureId;
using detect::FeatureWitness;
using frontend::CodeSample;
using frontend::Label;
using perturb::PerturbedVariant;
using perturb::VariantKind;

namespace {

std::vector<FeatureWitness> KeepEnabled(std::vector<FeatureWitness> ws, const RunConfig& config) {
  std::erase_if(ws, [&](const FeatureWitness& w) { return !config.Enabled(w.feature); });
  return ws;
}

nlohmann::json OptionalRatio(const std::optional<eval::Rational>& r) {
  if (!r) return nullptr;
  return eval::FormatFixed2(*r);
}

std::vector<std::string> SkippedIds(const std::vector<DetectedSample>& detected) {
  std::vector<std::string> ids;
  for (const DetectedSample& d : detected) {
    if (d.error) ids.push_back(d.sample.sample_id);
  }
  return ids;
}

fs::path VariantsManifest(const RunConfig& config) { return config.out / kVariantsManifest; }

// Samples perturb could not analyze; they have no predictions to check.
std::set<std::string> PerturbSkipped(const RunConfig& config) {
  std::set<std::string> ids;
  fs::path p = config.out / kPerturbSummaryFile;
  if (!fs::exists(p)) return ids;
  nlohmann::json j = nlohmann::json::parse(frontend::ReadFile(p));
  for (const auto& id : j.value("skipped_samples", nlohmann::json::array())) {
    ids.insert(id.get<std::string>());
  }
  return ids;
}

std::vector<CodeSample> AnalyzedOriginals(const RunConfig& config) {
  std::vector<CodeSample> samples = frontend::ReadManifest(ManifestPath(config.corpus));
  std::set<std::string> skipped = PerturbSkipped(config);
  std::erase_if(samples, [&](const CodeSample& s) { return skipped.contains(s.sample_id); });
  return samples;
}

std::string PredictionFileName(const std::string& detector_id) {
  std::string name = detector_id;
  std::replace(name.begin(), name.end(), ':', '_');
  return name + ".jsonl";
}

}  // namespace

std::optional<eval::Rational> FeatureScore::Precision() const {
  if (tp + fp == 0) return std::nullopt;
  return eval::Rational(tp, tp + fp);
}

std::optional<eval::Rational> FeatureScore::Recall() const {
  if (tp + fn == 0) return std::nullopt;
  return eval::Rational(tp, tp + fn);
}

fs::path ManifestPath(const fs::path& corpus) {
  if (fs::is_directory(corpus)) return corpus / "manifest.jsonl";
  return corpus;
}

std::vector<DetectedSample> DetectCorpus(const std::vector<CodeSample>& samples,
                                         const RunConfig& config) {
  cpg::SizeofModel sizes = config.Sizes();
  return ParallelMap(samples, config.workers, [&](const CodeSample& s) {
    DetectedSample d{s, std::nullopt, {}};
    detect::DetectionOutcome outcome =
        detect::DetectSource(s.sample_id, s.source, s.vulnerable_lines, sizes);
    d.error = outcome.error;
    d.annotated = detect::AnnotateSample(s, KeepEnabled(std::move(outcome.witnesses), config));
    return d;
  });
}

std::vector<DetectedSample> LoadDetected(const RunConfig& config) {
  std::vector<CodeSample> samples = frontend::ReadManifest(ManifestPath(config.corpus));
  fs::path path = config.out / kAnnotationsFile;
  if (!fs::exists(path)) return DetectCorpus(samples, config);

  std::map<std::string, detect::AnnotatedSample> by_id;
  for (detect::AnnotatedSample& a : detect::ReadAnnotations(path)) {
    std::string id = a.sample_id;
    by_id.emplace(std::move(id), std::move(a));
  }
  std::vector<DetectedSample> out;
  for (CodeSample& s : samples) {
    DetectedSample d{std::move(s), std::nullopt, {}};
    auto it = by_id.find(d.sample.sample_id);
    if (it == by_id.end()) {
      d.error = "not analyzed by detect";
      d.annotated = detect::AnnotateSample(d.sample, {});
    } else {
      d.annotated = std::move(it->second);
      d.annotated.witnesses = KeepEnabled(std::move(d.annotated.witnesses), config);
      by_id.erase(it);
    }
    out.push_back(std::move(d));
  }
  if (!by_id.empty()) {
    throw ConfigError(path.string() + ": annotation for unknown sample " + by_id.begin()->first);
  }
  return out;
}

std::vector<FeatureScore> ScoreDetection(const std::vector<DetectedSample>& detected,
                                         const RunConfig& config) {
  std::vector<FeatureScore> scores;
  for (FeatureId f : config.features) {
    FeatureScore score{f};
    std::string name(detect::FeatureName(f));
    for (const DetectedSample& d : detected) {
      if (d.error) continue;
      bool found = std::any_of(d.annotated.witnesses.begin(), d.annotated.witnesses.end(),
                               [&](const FeatureWitness& w) { return w.feature == f; });
      bool truth = std::find(d.sample.features.begin(), d.sample.features.end(), name) !=
                   d.sample.features.end();
      if (found && truth) ++score.tp;
      if (found && !truth) ++score.fp;
      if (!found && truth) ++score.fn;
    }
    scores.push_back(score);
  }
  return scores;
}

nlohmann::json DetectSummary(const std::vector<DetectedSample>& detected, const RunConfig& config) {
  nlohmann::json samples_per_feature = nlohmann::json::object();
  nlohmann::json witnesses_per_feature = nlohmann::json::object();
  for (FeatureId f : config.features) {
    int samples = 0, witnesses = 0;
    for (const DetectedSample& d : detected) {
      int n = static_cast<int>(std::count_if(
          d.annotated.witnesses.begin(), d.annotated.witnesses.end(),
          [&](const FeatureWitness& w) { return w.feature == f; }));
      witnesses += n;
      samples += n > 0;
    }
    samples_per_feature[std::string(detect::FeatureName(f))] = samples;
    witnesses_per_feature[std::string(detect::FeatureName(f))] = witnesses;
  }
  nlohmann::json skipped = nlohmann::json::array();
  for (const DetectedSample& d : detected) {
    if (d.error) skipped.push_back({{"sample_id", d.sample.sample_id}, {"reason", *d.error}});
  }
  // Ground truth only exists for corpora that record intended features.
  bool has_truth = std::any_of(detected.begin(), detected.end(),
                               [](const DetectedSample& d) { return !d.sample.features.empty(); });
  nlohmann::json truth = nullptr;
  if (has_truth) {
    truth = nlohmann::json::object();
    for (const FeatureScore& s : ScoreDetection(detected, config)) {
      truth[std::string(detect::FeatureName(s.feature))] = {{"tp", s.tp},
                                                             {"fp", s.fp},
                                                             {"fn", s.fn},
                                                             {"precision", OptionalRatio(s.Precision())},
                                                             {"recall", OptionalRatio(s.Recall())}};
    }
  }
  return {{"samples", detected.size()},
          {"analyzed", detected.size() - skipped.size()},
          {"skipped", skipped},
          {"samples_per_feature", samples_per_feature},
          {"witnesses_per_feature", witnesses_per_feature},
          {"disabled_rules", config.Disabled()},
          {"ground_truth", truth}};
}

detect::ValidationReport ValidateCorpus(const std::vector<DetectedSample>& detected) {
  std::vector<detect::SardInput> inputs;
  for (const DetectedSample& d : detected) {
    if (d.error) continue;
    inputs.push_back({d.annotated, frontend::ExtractAnnotations(d.sample.source)});
  }
  return detect::ValidateAgainstSard(inputs);
}

PerturbOutcome PerturbCorpus(const std::vector<DetectedSample>& detected, const RunConfig& config) {
  cpg::SizeofModel sizes = config.Sizes();
  std::span<const FeatureId> enabled(config.features);
  auto per_sample = ParallelMap(detected, config.workers, [&](const DetectedSample& d) {
    PerturbOutcome o;
    if (d.error) {
      o.skipped_samples.push_back(d.sample.sample_id);
      return o;
    }
    const std::vector<FeatureWitness>& parent = d.annotated.witnesses;
    std::vector<PerturbedVariant> candidates;
    perturb::VfPerturbationResult vf =
        perturb::GenerateVfPerturbations(d.annotated, d.sample.source, sizes);
    candidates = std::move(vf.variants);
    o.skipped = std::move(vf.skipped);
    for (VariantKind k : perturb::kSfKinds) {
      if (!config.Enabled(k)) continue;
      switch (k) {
        case VariantKind::kSfNodeSet:
          candidates.push_back(perturb::GenSfNodeSet(d.sample));
          break;
        case VariantKind::kSfEdgeSet:
          candidates.push_back(perturb::GenSfEdgeSet(d.sample));
          break;
        case VariantKind::kSfIdentifier:
          candidates.push_back(perturb::GenSfIdentifier(d.sample).first);
          break;
        default: {
          perturb::FormattingVariant f = perturb::GenSfFormatting(d.sample);
          if (f.noop) {
            ++o.formatting_noops;
          } else {
            candidates.push_back(std::move(f.variant));
          }
        }
      }
    }
    for (PerturbedVariant& v : candidates) {
      perturb::CheckResult check = perturb::SelfCheck(parent, v, sizes, enabled);
      if (check.ok) {
        v.path = std::string(kVariantsDir) + "/" + v.variant_id + ".c";
        o.variants.push_back(std::move(v));
      } else {
        o.failures.push_back(v.variant_id + ": " + check.message);
      }
    }
    return o;
  });

  PerturbOutcome all;
  for (PerturbOutcome& o : per_sample) {
    std::move(o.variants.begin(), o.variants.end(), std::back_inserter(all.variants));
    all.failures.insert(all.failures.end(), o.failures.begin(), o.failures.end());
    all.skipped.insert(all.skipped.end(), o.skipped.begin(), o.skipped.end());
    all.skipped_samples.insert(all.skipped_samples.end(), o.skipped_samples.begin(),
                               o.skipped_samples.end());
    all.formatting_noops += o.formatting_noops;
  }
  return all;
}

nlohmann::json PerturbSummary(const PerturbOutcome& outcome, const RunConfig& config) {
  std::map<std::string, std::map<std::string, int>> counts;
  int partial = 0;
  for (const PerturbedVariant& v : outcome.variants) {
    std::string row = v.feature ? std::string(detect::FeatureName(*v.feature))
                                : std::string(perturb::VariantKindName(v.kind));
    std::string col = v.feature ? std::string(perturb::VariantKindName(v.kind)) : "SF";
    ++counts[row][col];
    partial += v.partial;
  }
  nlohmann::json by_row = nlohmann::json::object();
  for (const auto& [row, cols] : counts) by_row[row] = cols;
  return {{"variants", outcome.variants.size()},
          {"counts", by_row},
          {"partial_fep", partial},
          {"formatting_noops", outcome.formatting_noops},
          {"self_check_failures", outcome.failures},
          {"uneditable", outcome.skipped},
          {"skipped_samples", outcome.skipped_samples},
          {"disabled_rules", config.Disabled()}};
}

eval::PredictionSet Predict(const eval::ReferenceDetector& detector,
                            const std::vector<CodeSample>& originals,
                            const std::vector<PerturbedVariant>& variants,
                            const RunConfig& config) {
  std::vector<eval::DetectorInput> inputs;
  inputs.reserve(originals.size() + variants.size());
  for (const CodeSample& s : originals) {
    inputs.push_back({s.sample_id, s.source, s.vulnerable_lines});
  }
  for (const PerturbedVariant& v : variants) {
    inputs.push_back({v.variant_id, v.source, v.vulnerable_lines});
  }
  eval::ReferenceDetector d = detector;
  d.features = config.features;
  cpg::SizeofModel sizes = config.Sizes();
  std::vector<Label> labels = ParallelMap(
      inputs, config.workers, [&](const eval::DetectorInput& in) { return d.Predict(in, sizes); });
  eval::PredictionSet set(d.Id());
  for (std::size_t i = 0; i < inputs.size(); ++i) set.Add(inputs[i].id, labels[i]);
  return set;
}

eval::EvaluationInput MakeEvaluationInput(const std::vector<CodeSample>& originals,
                                          const std::vector<PerturbedVariant>& variants,
                                          const RunConfig& config) {
  eval::EvaluationInput in;
  for (const CodeSample& s : originals) in.originals.push_back({s.sample_id, s.label});
  in.variants = variants;
  in.features = config.features;
  in.sf_kinds = config.sf_kinds;
  return in;
}

eval::EvaluationOptions MakeEvaluationOptions(const RunConfig& config) {
  eval::EvaluationOptions o;
  o.thresholds = config.thresholds;
  o.fpp_reference_mean = config.fpp_reference_mean;
  o.satisfaction.include_partial_fep = config.include_partial_fep;
  return o;
}

int CmdGenCorpus(const RunConfig& config, std::ostream& out, std::ostream&) {
  std::vector<CodeSample> samples = GenerateCorpus({config.samples, config.seed});
  WriteCorpus(config.out, samples);
  out << "wrote " << samples.size() << " samples to " << config.out.string() << "\n";
  return 0;
}

int CmdDetect(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<CodeSample> samples = frontend::ReadManifest(ManifestPath(config.corpus));
  std::vector<DetectedSample> detected = DetectCorpus(samples, config);

  std::vector<detect::AnnotatedSample> annotated;
  for (const DetectedSample& d : detected) {
    if (!d.error) annotated.push_back(d.annotated);
  }
  fs::create_directories(config.out);
  detect::WriteAnnotations(config.out / kAnnotationsFile, annotated);
  nlohmann::json summary = DetectSummary(detected, config);
  frontend::WriteFile(config.out / kDetectSummaryFile, summary.dump(2) + "\n");

  for (FeatureId f : config.features) {
    std::string name(detect::FeatureName(f));
    out << name << ": " << summary["samples_per_feature"][name].get<int>() << "\n";
  }
  std::vector<std::string> skipped = SkippedIds(detected);
  for (const auto& s : summary["skipped"]) {
    out << "skipped " << s["sample_id"].get<std::string>() << ": "
        << s["reason"].get<std::string>() << "\n";
  }
  if (!samples.empty() &&
      eval::Rational(static_cast<std::int64_t>(skipped.size()),
                     static_cast<std::int64_t>(samples.size())) > config.max_skip_rate) {
    err << "error: " << skipped.size() << " of " << samples.size()
        << " samples could not be analyzed (ceiling " << eval::FormatFixed2(config.max_skip_rate)
        << ")\n";
    return 1;
  }
  return 0;
}

int CmdValidate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  detect::ValidationReport report = ValidateCorpus(LoadDetected(config));
  fs::create_directories(config.out);
  frontend::WriteFile(config.out / kValidationFile, detect::ValidationToJson(report).dump(2) + "\n");
  if (!report.agreement_rate) {
    err << "warning: no sample carries FLAW/FIX annotations\n";
    out << "agreement rate: UNDEFINED\n";
    return 0;
  }
  out << "agreement rate: " << eval::FormatFixed2(*report.agreement_rate) << " (" << report.agreed
      << "/" << report.compared << ")\n";
  for (const detect::SampleValidation& s : report.samples) {
    for (const std::string& why : s.disagreements) out << s.sample_id << ": " << why << "\n";
  }
  return 0;
}

int CmdPerturb(const RunConfig& config, std::ostream& out, std::ostream& err) {
  PerturbOutcome outcome = PerturbCorpus(LoadDetected(config), config);
  fs::path dir = config.out / kVariantsDir;
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const PerturbedVariant& v : outcome.variants) frontend::WriteFile(config.out / v.path, v.source);
  perturb::WriteVariantManifest(VariantsManifest(config), outcome.variants);
  nlohmann::json summary = PerturbSummary(outcome, config);
  frontend::WriteFile(config.out / kPerturbSummaryFile, summary.dump(2) + "\n");

  for (const auto& [row, cols] : summary["counts"].items()) {
    out << row;
    for (const auto& [col, n] : cols.items()) out << " " << col << "=" << n.get<int>();
    out << "\n";
  }
  out << "variants: " << outcome.variants.size() << "\n";
  if (!outcome.failures.empty()) {
    for (const std::string& f : outcome.failures) err << "self-check failed: " << f << "\n";
    return 1;
  }
  return 0;
}

int CmdPredict(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<eval::ReferenceDetector> detector = eval::ReferenceDetector::Parse(config.detector);
  if (!detector) {
    err << "error: unknown detector " << config.detector << "\n";
    return 2;
  }
  std::vector<PerturbedVariant> variants = perturb::ReadVariantManifest(VariantsManifest(config));
  eval::PredictionSet set = Predict(*detector, AnalyzedOriginals(config), variants, config);
  fs::path path = config.out / kPredictionsDir / PredictionFileName(set.detector_id());
  fs::create_directories(path.parent_path());
  eval::WritePredictions(path, {set});
  out << "wrote " << set.size() << " predictions to " << path.string() << "\n";
  return 0;
}

int CmdEvaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<CodeSample> originals = AnalyzedOriginals(config);
  bool in_process = config.predictions.empty();
  std::vector<PerturbedVariant> variants =
      perturb::ReadVariantManifest(VariantsManifest(config), in_process);

  std::vector<eval::PredictionSet> sets;
  if (in_process) {
    std::optional<eval::ReferenceDetector> detector =
        eval::ReferenceDetector::Parse(config.detector);
    if (!detector) {
      err << "error: unknown detector " << config.detector << "\n";
      return 2;
    }
    sets.push_back(Predict(*detector, originals, variants, config));
  } else {
    sets = eval::ReadPredictions(config.predictions);
  }

  eval::EvaluationInput input = MakeEvaluationInput(originals, variants, config);
  eval::EvaluationOptions options = MakeEvaluationOptions(config);
  eval::EvaluationReport report;
  report.thresholds = config.thresholds;
  report.corpus.samples = static_cast<std::int64_t>(originals.size());
  report.corpus.variants = static_cast<std::int64_t>(variants.size());
  std::set<std::string> skipped = PerturbSkipped(config);
  report.corpus.skipped_samples.assign(skipped.begin(), skipped.end());
  report.corpus.disabled_rules = config.Disabled();
  if (sets.empty()) {
    err << "error: no predictions in " << config.predictions.string() << "\n";
    return 1;
  }
  int status = 0;
  for (const eval::PredictionSet& set : sets) {
    try {
      report.detectors.push_back(eval::EvaluateDetector(input, set, options));
    } catch (const eval::MissingPrediction& e) {
      err << "error: detector " << e.detector_id() << " has no prediction for " << e.ids().size()
          << " ids:\n";
      for (const std::string& id : e.ids()) err << "  " << id << "\n";
      status = 1;
    }
  }
  if (status != 0) return status;

  fs::create_directories(config.out);
  nlohmann::json j = eval::ReportToJson(report);
  std::string table = eval::RenderTable(report);
  frontend::WriteFile(config.out / kReportJson, j.dump(2) + "\n");
  frontend::WriteFile(config.out / kReportText, table);
  out << (config.format == "structured" ? j.dump(2) + "\n" : table);
  return 0;
}

int CmdReport(const RunConfig& config, std::ostream& out, std::ostream& err) {
  fs::path path = config.out / kReportJson;
  if (!fs::exists(path)) {
    err << "error: " << path.string() << " not found; run evaluate first\n";
    return 2;
  }
  eval::EvaluationReport report =
      eval::ReportFromJson(nlohmann::json::parse(frontend::ReadFile(path)));
  if (config.format == "structured") {
    out << eval::ReportToJson(report).dump(2) << "\n";
  } else {
    out << eval::RenderTable(report);
  }
  return 0;
}

}  // namespace viperkit::pipeline
