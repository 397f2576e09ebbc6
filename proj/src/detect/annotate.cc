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

#include "viperkit/detect/annotate.h"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace viperkit::detect {

AnnotatedSample AnnotateSample(const frontend::CodeSample& sample,
                               std::vector<FeatureWitness> witnesses) {
  AnnotatedSample a;
  a.sample_id = sample.sample_id;
  a.path = sample.path;
  a.label = sample.label;
  a.cwe = sample.cwe;
  a.vulnerable_lines = sample.vulnerable_lines;
  std::sort(witnesses.begin(), witnesses.end(), WitnessLess);
  a.witnesses = std::move(witnesses);
  return a;
}

nlohmann::json AnnotatedToJson(const AnnotatedSample& a) {
  nlohmann::json j = {{"sample_id", a.sample_id},
                      {"path", a.path},
                      {"label", frontend::LabelName(a.label)},
                      {"cwe", a.cwe ? nlohmann::json(*a.cwe) : nlohmann::json(nullptr)}};
  j["vulnerable_lines"] =
      a.vulnerable_lines ? nlohmann::json(*a.vulnerable_lines) : nlohmann::json(nullptr);
  nlohmann::json witnesses = nlohmann::json::array();
  for (const FeatureWitness& w : a.witnesses) witnesses.push_back(WitnessToJson(w));
  j["witnesses"] = std::move(witnesses);
  return j;
}

AnnotatedSample AnnotatedFromJson(const nlohmann::json& j) {
  AnnotatedSample a;
  a.sample_id = j.at("sample_id").get<std::string>();
  a.path = j.at("path").get<std::string>();
  auto label = frontend::ParseLabel(j.at("label").get<std::string>());
  if (!label) throw frontend::ManifestError("bad label in annotation " + a.sample_id);
  a.label = *label;
  if (!j.at("cwe").is_null()) a.cwe = j.at("cwe").get<std::string>();
  if (!j.at("vulnerable_lines").is_null()) {
    a.vulnerable_lines = j.at("vulnerable_lines").get<std::set<int>>();
  }
  for (const nlohmann::json& w : j.at("witnesses")) a.witnesses.push_back(WitnessFromJson(w));
  return a;
}

void WriteAnnotations(const std::filesystem::path& path,
                      const std::vector<AnnotatedSample>& samples) {
  std::string out;
  for (const AnnotatedSample& a : samples) out += AnnotatedToJson(a).dump() + "\n";
  frontend::WriteFile(path, out);
}

std::vector<AnnotatedSample> ReadAnnotations(const std::filesystem::path& path) {
  std::istringstream in(frontend::ReadFile(path));
  std::vector<AnnotatedSample> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(AnnotatedFromJson(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw frontend::ManifestError(path.string() + ":" + std::to_string(number) + ": " +
                                    e.what());
    }
  }
  return out;
}

}  // namespace viperkit::detect
