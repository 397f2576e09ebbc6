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

#ifndef VIPERKIT_PIPELINE_CORPUS_GEN_H_
#define VIPERKIT_PIPELINE_CORPUS_GEN_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "viperkit/detect/feature.h"
#include "viperkit/frontend/sample.h"

namespace viperkit::pipeline {

struct CorpusOptions {
  // Raised to 40 so every feature gets two vulnerable and two fixed samples.
  int samples = 40;
  std::uint64_t seed = 1;
};

// SARD-style test cases: sample i targets kAllFeatures[i % 10] and is
// vulnerable when (i / 10) is even. A vulnerable sample contains exactly
// one witness of its feature, with a FLAW comment on the line above each
// anchor and vulnerable_lines = the anchor lines; a fixed sample carries
// FIX comments, empty vulnerable_lines and no witness. Each sample depends
// only on (seed, i).
std::vector<frontend::CodeSample> GenerateCorpus(const CorpusOptions& options);

frontend::CodeSample GenerateSample(std::uint64_t seed, int index);

// Writes <dir>/manifest.jsonl and each sample's source at <dir>/<path>.
void WriteCorpus(const std::filesystem::path& dir, const std::vector<frontend::CodeSample>& samples);

}  // namespace viperkit::pipeline

#endif  // VIPERKIT_PIPELINE_CORPUS_GEN_H_
