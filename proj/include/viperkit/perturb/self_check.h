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

#ifndef VIPERKIT_PERTURB_SELF_CHECK_H_
#define VIPERKIT_PERTURB_SELF_CHECK_H_

#include <span>
#include <string>
#include <vector>

#include "viperkit/cpg/const_eval.h"
#include "viperkit/detect/feature.h"
#include "viperkit/detect/witness.h"
#include "viperkit/perturb/variant.h"

namespace viperkit::perturb {

// A parent witness expressed in the variant's lines and names.
detect::FeatureWitness MapWitness(const detect::FeatureWitness& w,
                                  const std::vector<int>& line_map, const SymbolMap* symbols);

struct CheckResult {
  bool ok = true;
  std::string message;
  std::vector<detect::FeatureWitness> witnesses;  // of the variant
};

// Re-detects the variant and checks its kind's contract:
//   FEP  no witness of the target feature remains
//   FPP  a witness of the target feature with the same anchors remains
//   SF   the parent's witness set, mapped, is reproduced exactly
// For FEP it also sets expected_label (non_vulnerable iff no witness of any
// feature remains) and `partial`.
// Witnesses of features outside `enabled` are ignored on both sides.
CheckResult SelfCheck(const std::vector<detect::FeatureWitness>& parent_witnesses,
                      PerturbedVariant& variant,
                      const cpg::SizeofModel& sizes = cpg::SizeofModel(),
                      std::span<const detect::FeatureId> enabled = detect::kAllFeatures);

}  // namespace viperkit::perturb

#endif  // VIPERKIT_PERTURB_SELF_CHECK_H_
