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

#ifndef VIPERKIT_EVAL_REFERENCE_H_
#define VIPERKIT_EVAL_REFERENCE_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "viperkit/cpg/const_eval.h"
#include "viperkit/detect/feature.h"
#include "viperkit/eval/prediction.h"

namespace viperkit::eval {

// Anything a reference detector can be asked about.
struct DetectorInput {
  std::string id;
  std::string source;
  std::optional<std::set<int>> vulnerable_lines;
};

enum class ReferenceKind { kOracle, kConstantVulnerable, kConstantBenign, kRandom };

struct ReferenceDetector {
  ReferenceKind kind = ReferenceKind::kOracle;
  std::uint64_t seed = 0;  // kRandom only
  // Rules the oracle consults.
  std::vector<detect::FeatureId> features = {detect::kAllFeatures.begin(),
                                             detect::kAllFeatures.end()};

  // "oracle", "constant_vulnerable", "constant_benign", "random:<seed>"
  // ("random" alone uses seed 0).
  static std::optional<ReferenceDetector> Parse(std::string_view spec);
  std::string Id() const;

  // The oracle predicts vulnerable iff the rules find any witness.
  frontend::Label Predict(const DetectorInput& input,
                          const cpg::SizeofModel& sizes = cpg::SizeofModel()) const;
};

}  // namespace viperkit::eval

#endif  // VIPERKIT_EVAL_REFERENCE_H_
