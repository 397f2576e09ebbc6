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

#include "viperkit/eval/reference.h"

#include <algorithm>
#include <charconv>
#include <random>

#include "viperkit/detect/detector.h"

namespace viperkit::eval {

std::optional<ReferenceDetector> ReferenceDetector::Parse(std::string_view spec) {
  ReferenceDetector d;
  if (spec == "oracle") {
    d.kind = ReferenceKind::kOracle;
  } else if (spec == "constant_vulnerable") {
    d.kind = ReferenceKind::kConstantVulnerable;
  } else if (spec == "constant_benign") {
    d.kind = ReferenceKind::kConstantBenign;
  } else if (spec == "random") {
    d.kind = ReferenceKind::kRandom;
  } else if (spec.starts_with("random:")) {
    d.kind = ReferenceKind::kRandom;
    std::string_view s = spec.substr(7);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d.seed);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  } else {
    return std::nullopt;
  }
  return d;
}

std::string ReferenceDetector::Id() const {
  switch (kind) {
    case ReferenceKind::kOracle:
      return "oracle";
    case ReferenceKind::kConstantVulnerable:
      return "constant_vulnerable";
    case ReferenceKind::kConstantBenign:
      return "constant_benign";
    case ReferenceKind::kRandom:
      return "random:" + std::to_string(seed);
  }
  return "?";
}

frontend::Label ReferenceDetector::Predict(const DetectorInput& input,
                                           const cpg::SizeofModel& sizes) const {
  switch (kind) {
    case ReferenceKind::kOracle: {
      detect::DetectionOutcome out =
          detect::DetectSource(input.id, input.source, input.vulnerable_lines, sizes);
      for (const detect::FeatureWitness& w : out.witnesses) {
        if (std::find(features.begin(), features.end(), w.feature) != features.end()) {
          return frontend::Label::kVulnerable;
        }
      }
      return frontend::Label::kNonVulnerable;
    }
    case ReferenceKind::kConstantVulnerable:
      return frontend::Label::kVulnerable;
    case ReferenceKind::kConstantBenign:
      return frontend::Label::kNonVulnerable;
    case ReferenceKind::kRandom: {
      // A generator seeded from (seed, id) keeps each answer independent of
      // the order in which ids are asked.
      std::vector<std::uint32_t> words = {static_cast<std::uint32_t>(seed),
                                          static_cast<std::uint32_t>(seed >> 32)};
      for (unsigned char c : input.id) words.push_back(c);
      std::seed_seq seq(words.begin(), words.end());
      std::mt19937_64 gen(seq);
      return (gen() & 1) != 0 ? frontend::Label::kVulnerable : frontend::Label::kNonVulnerable;
    }
  }
  return frontend::Label::kNonVulnerable;
}

}  // namespace viperkit::eval
