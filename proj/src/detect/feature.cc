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

#include "viperkit/detect/feature.h"

namespace viperkit::detect {

namespace {

struct FeatureInfo {
  std::string_view name;
  std::string_view rule;
  std::string_view cwe;
};

constexpr FeatureInfo kInfo[] = {
    {"IBS", "2.1", "CWE131"}, {"BSB", "2.2", "CWE806"}, {"OE", "2.3", "CWE193"},
    {"BO", "2.4", "CWE126"},  {"DF", "2.5", "CWE415"},  {"UAF", "2.6", "CWE416"},
    {"BUW", "2.7", "CWE124"}, {"BUR", "2.8", "CWE127"}, {"RA", "2.9", "CWE839"},
    {"WA", "2.10", "CWE805"},
};

}  // namespace

std::string_view FeatureName(FeatureId f) { return kInfo[static_cast<int>(f)].name; }
std::string_view FeatureRule(FeatureId f) { return kInfo[static_cast<int>(f)].rule; }
std::string_view FeatureCwe(FeatureId f) { return kInfo[static_cast<int>(f)].cwe; }

std::optional<FeatureId> ParseFeature(std::string_view name) {
  for (FeatureId f : kAllFeatures) {
    if (FeatureName(f) == name) return f;
  }
  return std::nullopt;
}

bool IsOverflowFeature(FeatureId f) {
  return f == FeatureId::kIBS || f == FeatureId::kBSB || f == FeatureId::kOE ||
         f == FeatureId::kBO;
}

bool NeedsVulnerableLines(FeatureId f) { return f == FeatureId::kRA || f == FeatureId::kWA; }

}  // namespace viperkit::detect
