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

#ifndef VIPERKIT_DETECT_ANNOTATE_H_
#define VIPERKIT_DETECT_ANNOTATE_H_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "viperkit/detect/witness.h"
#include "viperkit/frontend/sample.h"

namespace viperkit::detect {

struct AnnotatedSample {
  std::string sample_id;
  std::string path;
  frontend::Label label = frontend::Label::kNonVulnerable;
  std::optional<std::string> cwe;
  std::optional<std::set<int>> vulnerable_lines;
  std::vector<FeatureWitness> witnesses;

  friend bool operator==(const AnnotatedSample&, const AnnotatedSample&) = default;
};

// Copies the sample's identity and the witnesses, sorted.
AnnotatedSample AnnotateSample(const frontend::CodeSample& sample,
                               std::vector<FeatureWitness> witnesses);

nlohmann::json AnnotatedToJson(const AnnotatedSample& a);
AnnotatedSample AnnotatedFromJson(const nlohmann::json& j);

void WriteAnnotations(const std::filesystem::path& path,
                      const std::vector<AnnotatedSample>& samples);
std::vector<AnnotatedSample> ReadAnnotations(const std::filesystem::path& path);

}  // namespace viperkit::detect

#endif  // VIPERKIT_DETECT_ANNOTATE_H_
