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

#ifndef VIPERKIT_DETECT_VALIDATE_H_
#define VIPERKIT_DETECT_VALIDATE_H_

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

#include "viperkit/detect/annotate.h"
#include "viperkit/frontend/annotations.h"

namespace viperkit::detect {

inline constexpr int kLineTolerance = 1;

struct SampleValidation {
  std::string sample_id;
  bool agree = true;
  std::vector<int> flaw_lines;
  std::vector<int> witness_lines;
  // Human-readable reasons, empty when agree.
  std::vector<std::string> disagreements;
};

struct ValidationReport {
  std::vector<SampleValidation> samples;
  int compared = 0;
  int agreed = 0;
  // nullopt (UNDEFINED) when no sample carries annotations.
  std::optional<boost::rational<std::int64_t>> agreement_rate;
};

struct SardInput {
  AnnotatedSample annotated;
  std::vector<frontend::SardAnnotation> sard;
};

// A sample takes part when it has at least one SARD annotation. It agrees
// when every witness anchor lies within the tolerance of a FLAW or
// POTENTIAL FLAW line and every FLAW line lies within the tolerance of
// some line anchor of some witness.
ValidationReport ValidateAgainstSard(const std::vector<SardInput>& inputs);

nlohmann::json ValidationToJson(const ValidationReport& report);

}  // namespace viperkit::detect

#endif  // VIPERKIT_DETECT_VALIDATE_H_
