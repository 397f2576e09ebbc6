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

#include "viperkit/eval/report.h"

#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace viperkit::eval {

using nlohmann::json;

DetectorReport EvaluateDetector(const EvaluationInput& input, const PredictionSet& predictions,
                                const EvaluationOptions& options) {
  std::set<std::string> missing;
  for (const Truth& t : input.originals) {
    if (!predictions.Get(t.id)) missing.insert(t.id);
  }
  for (const perturb::PerturbedVariant& v : input.variants) {
    if (!predictions.Get(v.variant_id)) missing.insert(v.variant_id);
    if (!predictions.Get(v.parent)) missing.insert(v.parent);
  }
  if (!missing.empty()) {
    throw MissingPrediction(predictions.detector_id(), {missing.begin(), missing.end()});
  }

  DetectorReport r;
  r.detector_id = predictions.detector_id();
  for (detect::FeatureId f : input.features) {
    r.rows.push_back(FeatureSatisfaction(f, input.variants, predictions, options.satisfaction));
  }
  r.fpp_reference_mean = options.fpp_reference_mean
                             ? Percent(*options.fpp_reference_mean)
                             : MeanFppRate(r.rows);
  for (perturb::VariantKind k : input.sf_kinds) {
    r.rows.push_back(SfSatisfaction(k, input.variants, predictions));
  }
  for (const SatisfactionResult& row : r.rows) {
    r.categories.push_back(r.fpp_reference_mean
                               ? Classify(row, *r.fpp_reference_mean, options.thresholds)
                               : Category::kUnclassified);
  }
  std::vector<Truth> perturbed;
  for (const perturb::PerturbedVariant& v : input.variants) {
    perturbed.push_back({v.variant_id, v.expected_label});
  }
  r.accuracy = ComputeAccuracyDelta(input.originals, perturbed, predictions);
  return r;
}

namespace {

json OptionalRational(const std::optional<Rational>& r) {
  return r ? json(RationalToString(*r)) : json();
}

std::optional<Rational> ReadOptionalRational(const json& j) {
  if (j.is_null()) return std::nullopt;
  auto r = ParseRational(j.get<std::string>());
  if (!r) throw std::runtime_error("bad rational " + j.dump());
  return r;
}

Rational ReadRational(const json& j) {
  auto r = ReadOptionalRational(j);
  if (!r) throw std::runtime_error("missing rational");
  return *r;
}

std::string Fixed(const std::optional<Rational>& r) {
  return r ? FormatFixed2(*r) : "-";
}

json ConfusionToJson(const Confusion& c) {
  return {{"tp", c.tp},
          {"fp", c.fp},
          {"fn", c.fn},
          {"tn", c.tn},
          {"precision", Fixed(c.Precision())},
          {"recall", Fixed(c.Recall())}};
}

Confusion ConfusionFromJson(const json& j) {
  return {j.at("tp").get<std::int64_t>(), j.at("fp").get<std::int64_t>(),
          j.at("fn").get<std::int64_t>(), j.at("tn").get<std::int64_t>()};
}

}  // namespace

json ReportToJson(const EvaluationReport& report) {
  json j;
  j["schema_version"] = report.schema_version;
  j["thresholds"] = {{"epsilon", RationalToString(report.thresholds.epsilon)},
                     {"fep_floor", RationalToString(report.thresholds.fep_floor)}};
  j["corpus"] = {{"samples", report.corpus.samples},
                 {"variants", report.corpus.variants},
                 {"skipped_samples", report.corpus.skipped_samples},
                 {"disabled_rules", report.corpus.disabled_rules}};
  json detectors = json::array();
  for (const DetectorReport& d : report.detectors) {
    json dj;
    dj["detector_id"] = d.detector_id;
    dj["fpp_reference_mean"] = OptionalRational(d.fpp_reference_mean);
    dj["fpp_reference_mean_pct"] = FormatPercent(d.fpp_reference_mean);
    json rows = json::array();
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
      const SatisfactionResult& r = d.rows[i];
      rows.push_back({{"row", r.row},
                      {"T_FPP", r.t_fpp},
                      {"T'_FPP", r.kept_fpp},
                      {"T_FEP", r.t_fep},
                      {"T'_FEP", r.flipped_fep},
                      {"excluded_partial_fep", r.excluded_partial},
                      {"SR_FPP", FormatPercent(r.SrFpp())},
                      {"SR_FEP", FormatPercent(r.SrFep())},
                      {"SR_f", FormatPercent(r.SrF())},
                      {"category", CategoryName(d.categories.at(i))}});
    }
    dj["rows"] = std::move(rows);
    dj["accuracy"] = {{"original", ConfusionToJson(d.accuracy.original)},
                      {"perturbed", ConfusionToJson(d.accuracy.perturbed)},
                      {"precision_delta", OptionalRational(d.accuracy.precision_delta)},
                      {"recall_delta", OptionalRational(d.accuracy.recall_delta)},
                      {"precision_delta_fixed", Fixed(d.accuracy.precision_delta)},
                      {"recall_delta_fixed", Fixed(d.accuracy.recall_delta)}};
    detectors.push_back(std::move(dj));
  }
  j["detectors"] = std::move(detectors);
  return j;
}

EvaluationReport ReportFromJson(const json& j) {
  EvaluationReport report;
  report.schema_version = j.at("schema_version").get<int>();
  if (report.schema_version != kReportSchemaVersion) {
    throw std::runtime_error("unsupported report schema " + std::to_string(report.schema_version));
  }
  report.thresholds.epsilon = ReadRational(j.at("thresholds").at("epsilon"));
  report.thresholds.fep_floor = ReadRational(j.at("thresholds").at("fep_floor"));
  const json& c = j.at("corpus");
  report.corpus.samples = c.at("samples").get<std::int64_t>();
  report.corpus.variants = c.at("variants").get<std::int64_t>();
  report.corpus.skipped_samples = c.at("skipped_samples").get<std::vector<std::string>>();
  report.corpus.disabled_rules = c.at("disabled_rules").get<std::vector<std::string>>();
  for (const json& dj : j.at("detectors")) {
    DetectorReport d;
    d.detector_id = dj.at("detector_id").get<std::string>();
    d.fpp_reference_mean = ReadOptionalRational(dj.at("fpp_reference_mean"));
    for (const json& rj : dj.at("rows")) {
      SatisfactionResult r;
      r.row = rj.at("row").get<std::string>();
      r.t_fpp = rj.at("T_FPP").get<std::int64_t>();
      r.kept_fpp = rj.at("T'_FPP").get<std::int64_t>();
      r.t_fep = rj.at("T_FEP").get<std::int64_t>();
      r.flipped_fep = rj.at("T'_FEP").get<std::int64_t>();
      r.excluded_partial = rj.at("excluded_partial_fep").get<std::int64_t>();
      auto cat = ParseCategory(rj.at("category").get<std::string>());
      if (!cat) throw std::runtime_error("unknown category in " + r.row);
      d.rows.push_back(std::move(r));
      d.categories.push_back(*cat);
    }
    const json& a = dj.at("accuracy");
    d.accuracy.original = ConfusionFromJson(a.at("original"));
    d.accuracy.perturbed = ConfusionFromJson(a.at("perturbed"));
    d.accuracy.precision_delta = ReadOptionalRational(a.at("precision_delta"));
    d.accuracy.recall_delta = ReadOptionalRational(a.at("recall_delta"));
    report.detectors.push_back(std::move(d));
  }
  return report;
}

std::string RenderTable(const EvaluationReport& report) {
  std::ostringstream out;
  out << "thresholds: epsilon " << FormatFixed2(report.thresholds.epsilon) << ", fep_floor "
      << FormatFixed2(report.thresholds.fep_floor) << "\n";
  out << "corpus: " << report.corpus.samples << " samples, " << report.corpus.variants
      << " variants, " << report.corpus.skipped_samples.size() << " skipped";
  if (!report.corpus.disabled_rules.empty()) {
    out << ", disabled:";
    for (const std::string& r : report.corpus.disabled_rules) out << " " << r;
  }
  out << "\n";
  auto cell = [&](const auto& v, int width) { out << std::right << std::setw(width) << v; };
  for (const DetectorReport& d : report.detectors) {
    out << "\ndetector: " << d.detector_id << " (fpp_reference_mean "
        << FormatPercent(d.fpp_reference_mean) << ")\n";
    out << std::left << std::setw(14) << "feature";
    for (const char* h : {"T_FPP", "T'_FPP", "SR_FPP", "T_FEP", "T'_FEP", "SR_FEP", "SR_f"}) {
      cell(h, 8);
    }
    out << "  category\n";
    std::int64_t excluded = 0;
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
      const SatisfactionResult& r = d.rows[i];
      excluded += r.excluded_partial;
      out << std::left << std::setw(14) << r.row;
      cell(r.t_fpp, 8);
      cell(r.kept_fpp, 8);
      cell(FormatPercent(r.SrFpp()), 8);
      cell(r.t_fep, 8);
      cell(r.flipped_fep, 8);
      cell(FormatPercent(r.SrFep()), 8);
      cell(FormatPercent(r.SrF()), 8);
      out << "  " << CategoryName(d.categories.at(i)) << "\n";
    }
    const AccuracyDelta& a = d.accuracy;
    out << "precision " << Fixed(a.original.Precision()) << " -> "
        << Fixed(a.perturbed.Precision()) << " (delta " << Fixed(a.precision_delta) << ")\n";
    out << "recall    " << Fixed(a.original.Recall()) << " -> " << Fixed(a.perturbed.Recall())
        << " (delta " << Fixed(a.recall_delta) << ")\n";
    out << "partial FEPs excluded: " << excluded << "\n";
  }
  return out.str();
}

}  // namespace viperkit::eval
