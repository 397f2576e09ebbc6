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

#ifndef VIPERKIT_PIPELINE_CONFIG_H_
#define VIPERKIT_PIPELINE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "viperkit/cpg/const_eval.h"
#include "viperkit/detect/feature.h"
#include "viperkit/eval/metrics.h"
#include "viperkit/perturb/variant.h"

namespace viperkit::pipeline {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::filesystem::path corpus = "corpus";
  std::filesystem::path out = "out";
  std::vector<detect::FeatureId> features = {detect::kAllFeatures.begin(),
                                             detect::kAllFeatures.end()};
  std::vector<perturb::VariantKind> sf_kinds = {perturb::kSfKinds.begin(),
                                                perturb::kSfKinds.end()};
  eval::Thresholds thresholds;
  std::optional<eval::Rational> fpp_reference_mean;
  bool include_partial_fep = false;
  // sizeof overrides as given, e.g. {"int": 2, "pointer": 4}.
  std::map<std::string, std::int64_t> sizeof_overrides;
  std::uint64_t seed = 1;
  int workers = 1;
  int samples = 40;
  // detect fails when more than this share of samples cannot be analyzed.
  eval::Rational max_skip_rate{1, 2};
  std::string detector = "oracle";
  std::filesystem::path predictions;
  std::string format = "table";

  cpg::SizeofModel Sizes() const;
  bool Enabled(detect::FeatureId f) const;
  bool Enabled(perturb::VariantKind k) const;
  // Names of the rules and SF kinds switched off, in canonical order.
  std::vector<std::string> Disabled() const;
};

// Sets one key. Keys: corpus, out, features, epsilon, fep_floor,
// fpp_reference_mean, include_partial_fep, sizeof.<type>, seed, workers,
// samples, max_skip_rate, detector, predictions, format.
void SetConfigValue(RunConfig* config, std::string_view key, std::string_view value);

// Flat key=value lines; '#' starts a comment line. Errors name the line.
void ApplyConfigText(RunConfig* config, std::string_view text);

// Defaults, then the file named by $VIPERKIT_CONFIG when set.
RunConfig LoadDefaultConfig();

}  // namespace viperkit::pipeline

#endif  // VIPERKIT_PIPELINE_CONFIG_H_
