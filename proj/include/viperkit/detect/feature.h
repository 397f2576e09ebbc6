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

#ifndef VIPERKIT_DETECT_FEATURE_H_
#define VIPERKIT_DETECT_FEATURE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace viperkit::detect {

// The ten vulnerability features, in rule-id order.
enum class FeatureId : std::uint8_t {
  kIBS,  // incorrect buffer size
  kBSB,  // buffer size from source buffer
  kOE,   // off-by-one
  kBO,   // buffer over-read
  kDF,   // double free
  kUAF,  // use after free
  kBUW,  // buffer underwrite
  kBUR,  // buffer under-read
  kRA,   // sensitive read API
  kWA,   // sensitive write API
};

inline constexpr std::array<FeatureId, 10> kAllFeatures = {
    FeatureId::kIBS, FeatureId::kBSB, FeatureId::kOE,  FeatureId::kBO,  FeatureId::kDF,
    FeatureId::kUAF, FeatureId::kBUW, FeatureId::kBUR, FeatureId::kRA, FeatureId::kWA};

std::string_view FeatureName(FeatureId f);
std::optional<FeatureId> ParseFeature(std::string_view name);

// Rule id, "2.1" for IBS through "2.10" for WA.
std::string_view FeatureRule(FeatureId f);

// Canonical CWE id, e.g. "CWE131" for IBS.
std::string_view FeatureCwe(FeatureId f);

bool IsOverflowFeature(FeatureId f);

// RA and WA need line-level ground truth.
bool NeedsVulnerableLines(FeatureId f);

}  // namespace viperkit::detect

#endif  // VIPERKIT_DETECT_FEATURE_H_
