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

#ifndef VIPERKIT_EVAL_METRICS_H_
#define VIPERKIT_EVAL_METRICS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "viperkit/detect/feature.h"
#include "viperkit/eval/prediction.h"
#include "viperkit/perturb/variant.h"

namespace viperkit::eval {

using Rational = boost::rational<std::int64_t>;
// nullopt stands for UNDEFINED (zero denominator).
using Percent = std::optional<Rational>;

// 100 * num / den, or UNDEFINED when den is zero.
Percent Percentage(std::int64_t num, std::int64_t den);

// Two decimals, rounded half away from zero; "-" for UNDEFINED.
std::string FormatPercent(const Percent& p);
std::string FormatFixed2(const Rational& r);

// "3", "2.5", "7/2" -> exact rational.
std::optional<Rational> ParseRational(std::string_view text);
// "p/q" (or "p" when q is 1); the inverse of ParseRational.
std::string RationalToString(const Rational& r);

// One row of the satisfaction table: a VF or an SF kind.
struct SatisfactionResult {
  std::string row;  // "IBS" ... "WA", "SF_NODE_SET" ...
  std::int64_t t_fpp = 0;
  std::int64_t t_fep = 0;
  std::int64_t kept_fpp = 0;     // T'_FPP
  std::int64_t flipped_fep = 0;  // T'_FEP
  // FEPs left out of T_FEP because other witnesses survived them.
  std::int64_t excluded_partial = 0;

  Percent SrFpp() const { return Percentage(kept_fpp, t_fpp); }
  Percent SrFep() const { return Percentage(flipped_fep, t_fep); }
  Percent SrF() const { return Percentage(kept_fpp + flipped_fep, t_fpp + t_fep); }
  friend bool operator==(const SatisfactionResult&, const SatisfactionResult&) = default;
};

struct SatisfactionOptions {
  bool include_partial_fep = false;
};

// Counts the FPP/FEP variants of `feature` (SF variants of `sf_kind`) whose
// prediction behaves as required relative to the parent's prediction. SF
// variants count as preserving. Throws MissingPrediction listing every
// variant or parent without a prediction.
SatisfactionResult Satisfaction(std::string row, const std::vector<perturb::PerturbedVariant>& variants,
                                const PredictionSet& predictions,
                                const SatisfactionOptions& options = {});
SatisfactionResult FeatureSatisfaction(detect::FeatureId feature,
                                       const std::vector<perturb::PerturbedVariant>& all,
                                       const PredictionSet& predictions,
                                       const SatisfactionOptions& options = {});
SatisfactionResult SfSatisfaction(perturb::VariantKind kind,
                                  const std::vector<perturb::PerturbedVariant>& all,
                                  const PredictionSet& predictions);

enum class Category { kHH, kHL, kLH, kLL, kUnclassified };
std::string_view CategoryName(Category c);
std::optional<Category> ParseCategory(std::string_view name);

struct Thresholds {
  Rational epsilon{3};
  Rational fep_floor{51};
  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

// FPP high iff SR_FPP >= mean - epsilon; FEP high iff SR_FEP >= fep_floor.
// Either rate UNDEFINED -> kUnclassified.
Category Classify(const SatisfactionResult& result, const Rational& fpp_reference_mean,
                  const Thresholds& thresholds = {});

// Mean SR_FPP over the rows where it is defined; UNDEFINED if none.
Percent MeanFppRate(const std::vector<SatisfactionResult>& rows);

// Confusion counts with vulnerable as the positive class.
struct Confusion {
  std::int64_t tp = 0, fp = 0, fn = 0, tn = 0;
  std::optional<Rational> Precision() const;
  std::optional<Rational> Recall() const;
  friend bool operator==(const Confusion&, const Confusion&) = default;
};

struct Truth {
  std::string id;
  frontend::Label label;
};

// Throws MissingPrediction for truths without a prediction.
Confusion Confuse(const std::vector<Truth>& truths, const PredictionSet& predictions);

struct AccuracyDelta {
  Confusion original;
  Confusion perturbed;
  std::optional<Rational> precision_delta;  // perturbed - original
  std::optional<Rational> recall_delta;
  friend bool operator==(const AccuracyDelta&, const AccuracyDelta&) = default;
};

AccuracyDelta ComputeAccuracyDelta(const std::vector<Truth>& originals,
                                   const std::vector<Truth>& perturbed,
                                   const PredictionSet& predictions);

}  // namespace viperkit::eval

#endif  // VIPERKIT_EVAL_METRICS_H_
