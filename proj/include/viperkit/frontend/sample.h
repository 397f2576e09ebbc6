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

#ifndef VIPERKIT_FRONTEND_SAMPLE_H_
#define VIPERKIT_FRONTEND_SAMPLE_H_

#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace viperkit::frontend {

enum class Label { kVulnerable, kNonVulnerable };

std::string_view LabelName(Label label);
std::optional<Label> ParseLabel(std::string_view text);

// The ten CWE identifiers the tool knows about, in "CWE805" form.
const std::vector<std::string>& KnownCwes();

// Accepts "CWE805", "CWE-805" or "805"; returns the canonical form or
// nullopt when the id is not one of KnownCwes().
std::optional<std::string> CanonicalCwe(std::string_view text);

struct CodeSample {
  std::string sample_id;
  std::string path;
  Label label = Label::kNonVulnerable;
  std::optional<std::string> cwe;
  // Absent when the corpus does not record line-level ground truth.
  std::optional<std::set<int>> vulnerable_lines;
  std::string source;
  // Feature names the sample was built to contain; empty for external
  // corpora.
  std::vector<std::string> features;
};

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checks the label / vulnerable-line invariants. Returns an empty string
// when the sample is consistent.
std::string CheckSample(const CodeSample& sample);

nlohmann::json SampleToJson(const CodeSample& sample);

// Reads the record fields; `source` is left empty.
CodeSample SampleFromJson(const nlohmann::json& record);

// Reads a JSONL manifest and loads each sample's source, resolving
// relative paths against the manifest's directory.
std::vector<CodeSample> ReadManifest(const std::filesystem::path& manifest);

// Writes one record per line, in the given order.
void WriteManifest(const std::filesystem::path& manifest,
                   const std::vector<CodeSample>& samples);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace viperkit::frontend

#endif  // VIPERKIT_FRONTEND_SAMPLE_H_
