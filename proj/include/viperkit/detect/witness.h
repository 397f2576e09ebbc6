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

#ifndef VIPERKIT_DETECT_WITNESS_H_
#define VIPERKIT_DETECT_WITNESS_H_

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "viperkit/cpg/const_eval.h"
#include "viperkit/detect/feature.h"

namespace viperkit::detect {

// One detected feature instance. Anchor, variable and constant names follow
// the per-feature schema (see RequiredLines and friends).
struct FeatureWitness {
  std::string sample_id;
  FeatureId feature = FeatureId::kIBS;
  std::string function;
  std::map<std::string, int> lines;
  std::map<std::string, std::string> vars;
  std::map<std::string, cpg::ConstValue> constants;

  // The line a FLAW annotation is expected on.
  int AnchorLine() const;
  friend bool operator==(const FeatureWitness&, const FeatureWitness&) = default;
};

// Total order used to emit witnesses deterministically.
bool WitnessLess(const FeatureWitness& a, const FeatureWitness& b);

const std::vector<std::string>& RequiredLines(FeatureId f);
const std::vector<std::string>& RequiredVars(FeatureId f);
const std::vector<std::string>& RequiredConstants(FeatureId f);

// Name of the anchor AnchorLine() reads.
std::string_view AnchorName(FeatureId f);

// Empty when the witness carries every required anchor and its constants
// satisfy the rule predicate; otherwise a description of the problem.
std::string CheckWitness(const FeatureWitness& w);

// Rule predicates over known constants.
bool IbsHolds(std::int64_t len_d, std::int64_t n);
bool BsbHolds(std::int64_t len_d, std::int64_t len_s, std::int64_t n);
bool OeHolds(std::int64_t len_d, std::int64_t n);
bool BoHolds(std::int64_t len_s, std::int64_t n);

nlohmann::json WitnessToJson(const FeatureWitness& w);
FeatureWitness WitnessFromJson(const nlohmann::json& j);

}  // namespace viperkit::detect

#endif  // VIPERKIT_DETECT_WITNESS_H_
