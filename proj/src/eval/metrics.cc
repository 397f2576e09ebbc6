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

#include "viperkit/eval/metrics.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace viperkit::eval {

using frontend::Label;
using perturb::PerturbedVariant;
using perturb::VariantKind;

Percent Percentage(std::int64_t num, std::int64_t den) {
  if (den == 0) return std::nullopt;
  return Rational(100 * num, den);
}

std::string FormatFixed2(const Rational& r) {
  Rational scaled = r * 100;
  std::int64_t n = scaled.numerator();
  std::int64_t d = scaled.denominator();
  bool negative = n < 0;
  std::int64_t a = negative ? -n : n;
  std::int64_t q = (2 * a + d) / (2 * d);  // half away from zero
  std::string frac = std::to_string(q % 100);
  if (frac.size() < 2) frac = "0" + frac;
  return std::string(negative && q != 0 ? "-" : "") + std::to_string(q / 100) + "." + frac;
}

std::string FormatPercent(const Percent& p) { return p ? FormatFixed2(*p) : "-"; }

namespace {

std::optional<std::int64_t> ParseInt(std::string_view s) {
  std::int64_t v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Rational> ParseRational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = ParseInt(text.substr(0, slash));
    auto q = ParseInt(text.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    return Rational(*p, *q);
  }
  bool negative = !text.empty() && text.front() == '-';
  if (negative) text.remove_prefix(1);
  std::string_view whole = text;
  std::string_view frac;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
  }
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (frac.size() > 12) return std::nullopt;
  for (char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  std::int64_t w = 0;
  if (!whole.empty()) {
    auto v = ParseInt(whole);
    if (!v || *v < 0) return std::nullopt;
    w = *v;
  }
  std::int64_t scale = 1;
  std::int64_t f = 0;
  for (char c : frac) {
    scale *= 10;
    f = f * 10 + (c - '0');
  }
  Rational r = Rational(w) + Rational(f, scale);
  return negative ? -r : r;
}

std::string RationalToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

void RequirePredictions(const std::vector<const PerturbedVariant*>& variants,
                        const PredictionSet& predictions) {
  std::set<std::string> missing;
  for (const PerturbedVariant* v : variants) {
    if (!predictions.Get(v->variant_id)) missing.insert(v->variant_id);
    if (!predictions.Get(v->parent)) missing.insert(v->parent);
  }
  if (!missing.empty()) {
    throw MissingPrediction(predictions.detector_id(), {missing.begin(), missing.end()});
  }
}

SatisfactionResult Count(std::string row, const std::vector<const PerturbedVariant*>& variants,
                         const PredictionSet& predictions, const SatisfactionOptions& options) {
  RequirePredictions(variants, predictions);
  SatisfactionResult r;
  r.row = std::move(row);
  for (const PerturbedVariant* v : variants) {
    bool same = *predictions.Get(v->variant_id) == *predictions.Get(v->parent);
    if (v->kind == VariantKind::kFEP) {
      if (v->partial && !options.include_partial_fep) {
        ++r.excluded_partial;
        continue;
      }
      ++r.t_fep;
      if (!same) ++r.flipped_fep;
    } else {
      ++r.t_fpp;
      if (same) ++r.kept_fpp;
    }
  }
  return r;
}

}  // namespace

SatisfactionResult Satisfaction(std::string row, const std::vector<PerturbedVariant>& variants,
                                const PredictionSet& predictions,
                                const SatisfactionOptions& options) {
  std::vector<const PerturbedVariant*> ptrs;
  for (const PerturbedVariant& v : variants) ptrs.push_back(&v);
  return Count(std::move(row), ptrs, predictions, options);
}

SatisfactionResult FeatureSatisfaction(detect::FeatureId feature,
                                       const std::vector<PerturbedVariant>& all,
                                       const PredictionSet& predictions,
                                       const SatisfactionOptions& options) {
  std::vector<const PerturbedVariant*> ptrs;
  for (const PerturbedVariant& v : all) {
    if (!perturb::IsSfKind(v.kind) && v.feature == feature) ptrs.push_back(&v);
  }
  return Count(std::string(detect::FeatureName(feature)), ptrs, predictions, options);
}

SatisfactionResult SfSatisfaction(VariantKind kind, const std::vector<PerturbedVariant>& all,
                                  const PredictionSet& predictions) {
  std::vector<const PerturbedVariant*> ptrs;
  for (const PerturbedVariant& v : all) {
    if (v.kind == kind) ptrs.push_back(&v);
  }
  return Count(std::string(perturb::VariantKindName(kind)), ptrs, predictions, {});
}

std::string_view CategoryName(Category c) {
  switch (c) {
    case Category::kHH:
      return "HH";
    case Category::kHL:
      return "HL";
    case Category::kLH:
      return "LH";
    case Category::kLL:
      return "LL";
    case Category::kUnclassified:
      return "UNCLASSIFIED";
  }
  return "?";
}

std::optional<Category> ParseCategory(std::string_view name) {
  for (Category c : {Category::kHH, Category::kHL, Category::kLH, Category::kLL,
                     Category::kUnclassified}) {
    if (CategoryName(c) == name) return c;
  }
  return std::nullopt;
}

Category Classify(const SatisfactionResult& result, const Rational& fpp_reference_mean,
                  const Thresholds& thresholds) {
  Percent fpp = result.SrFpp();
  Percent fep = result.SrFep();
  if (!fpp || !fep) return Category::kUnclassified;
  bool fpp_high = *fpp >= fpp_reference_mean - thresholds.epsilon;
  bool fep_high = *fep >= thresholds.fep_floor;
  if (fpp_high) return fep_high ? Category::kHH : Category::kHL;
  return fep_high ? Category::kLH : Category::kLL;
}

Percent MeanFppRate(const std::vector<SatisfactionResult>& rows) {
  Rational sum(0);
  std::int64_t n = 0;
  for (const SatisfactionResult& r : rows) {
    if (Percent p = r.SrFpp()) {
      sum += *p;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

std::optional<Rational> Confusion::Precision() const {
  if (tp + fp == 0) return std::nullopt;
  return Rational(tp, tp + fp);
}

std::optional<Rational> Confusion::Recall() const {
  if (tp + fn == 0) return std::nullopt;
  return Rational(tp, tp + fn);
}

namespace {

Confusion ConfuseUnchecked(const std::vector<Truth>& truths, const PredictionSet& predictions) {
  Confusion c;
  for (const Truth& t : truths) {
    bool predicted = *predictions.Get(t.id) == Label::kVulnerable;
    bool actual = t.label == Label::kVulnerable;
    if (predicted && actual) ++c.tp;
    if (predicted && !actual) ++c.fp;
    if (!predicted && actual) ++c.fn;
    if (!predicted && !actual) ++c.tn;
  }
  return c;
}

void RequireTruths(const std::vector<const std::vector<Truth>*>& lists,
                   const PredictionSet& predictions) {
  std::set<std::string> missing;
  for (const auto* list : lists) {
    for (const Truth& t : *list) {
      if (!predictions.Get(t.id)) missing.insert(t.id);
    }
  }
  if (!missing.empty()) {
    throw MissingPrediction(predictions.detector_id(), {missing.begin(), missing.end()});
  }
}

std::optional<Rational> Delta(const std::optional<Rational>& after,
                              const std::optional<Rational>& before) {
  if (!after || !before) return std::nullopt;
  return *after - *before;
}

}  // namespace

Confusion Confuse(const std::vector<Truth>& truths, const PredictionSet& predictions) {
  RequireTruths({&truths}, predictions);
  return ConfuseUnchecked(truths, predictions);
}

AccuracyDelta ComputeAccuracyDelta(const std::vector<Truth>& originals,
                                   const std::vector<Truth>& perturbed,
                                   const PredictionSet& predictions) {
  RequireTruths({&originals, &perturbed}, predictions);
  AccuracyDelta d;
  d.original = ConfuseUnchecked(originals, predictions);
  d.perturbed = ConfuseUnchecked(perturbed, predictions);
  d.precision_delta = Delta(d.perturbed.Precision(), d.original.Precision());
  d.recall_delta = Delta(d.perturbed.Recall(), d.original.Recall());
  return d;
}

}  // namespace viperkit::eval
