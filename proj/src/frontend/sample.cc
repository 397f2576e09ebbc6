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

#include "viperkit/frontend/sample.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "viperkit/frontend/edits.h"

namespace viperkit::frontend {

std::string_view LabelName(Label label) {
  return label == Label::kVulnerable ? "vulnerable" : "non_vulnerable";
}

std::optional<Label> ParseLabel(std::string_view text) {
  if (text == "vulnerable" || text == "1") return Label::kVulnerable;
  if (text == "non_vulnerable" || text == "0") return Label::kNonVulnerable;
  return std::nullopt;
}

const std::vector<std::string>& KnownCwes() {
  static const std::vector<std::string> kCwes = {
      "CWE805", "CWE806", "CWE124", "CWE127", "CWE193",
      "CWE126", "CWE415", "CWE839", "CWE131", "CWE416"};
  return kCwes;
}

std::optional<std::string> CanonicalCwe(std::string_view text) {
  if (text.starts_with("CWE")) text.remove_prefix(3);
  if (text.starts_with("-")) text.remove_prefix(1);
  std::string id = "CWE" + std::string(text);
  const auto& known = KnownCwes();
  if (std::find(known.begin(), known.end(), id) == known.end()) return std::nullopt;
  return id;
}

std::string CheckSample(const CodeSample& sample) {
  if (sample.vulnerable_lines && !sample.vulnerable_lines->empty() &&
      sample.label != Label::kVulnerable) {
    return "sample " + sample.sample_id +
           " lists vulnerable lines but is labelled non_vulnerable";
  }
  if (sample.vulnerable_lines) {
    int lines = CountLines(sample.source);
    for (int line : *sample.vulnerable_lines) {
      if (line < 1 || line > lines) {
        return "sample " + sample.sample_id + " vulnerable line " +
               std::to_string(line) + " outside 1.." + std::to_string(lines);
      }
    }
  }
  return {};
}

nlohmann::json SampleToJson(const CodeSample& sample) {
  nlohmann::json j;
  j["sample_id"] = sample.sample_id;
  j["path"] = sample.path;
  j["label"] = std::string(LabelName(sample.label));
  j["cwe"] = sample.cwe ? nlohmann::json(*sample.cwe) : nlohmann::json(nullptr);
  if (sample.vulnerable_lines) {
    j["vulnerable_lines"] = std::vector<int>(sample.vulnerable_lines->begin(),
                                             sample.vulnerable_lines->end());
  } else {
    j["vulnerable_lines"] = nullptr;
  }
  if (!sample.features.empty()) j["features"] = sample.features;
  return j;
}

CodeSample SampleFromJson(const nlohmann::json& record) {
  if (!record.is_object()) throw ManifestError("manifest record is not an object");
  auto require = [&record](const char* key) -> const nlohmann::json& {
    if (!record.contains(key)) {
      throw ManifestError(std::string("manifest record missing '") + key + "'");
    }
    return record.at(key);
  };
  CodeSample s;
  try {
    s.sample_id = require("sample_id").get<std::string>();
    s.path = require("path").get<std::string>();
    std::string label = require("label").get<std::string>();
    std::optional<Label> parsed = ParseLabel(label);
    if (!parsed) throw ManifestError("unknown label '" + label + "'");
    s.label = *parsed;
    if (record.contains("cwe") && !record.at("cwe").is_null()) {
      std::string cwe = record.at("cwe").get<std::string>();
      std::optional<std::string> canonical = CanonicalCwe(cwe);
      s.cwe = canonical ? *canonical : cwe;
    }
    if (record.contains("vulnerable_lines") && !record.at("vulnerable_lines").is_null()) {
      std::vector<int> lines = record.at("vulnerable_lines").get<std::vector<int>>();
      s.vulnerable_lines = std::set<int>(lines.begin(), lines.end());
    }
    if (record.contains("features")) {
      s.features = record.at("features").get<std::vector<std::string>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ManifestError(std::string("malformed manifest record: ") + e.what());
  }
  return s;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

std::vector<CodeSample> ReadManifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw ManifestError("cannot open manifest " + manifest.string());
  std::filesystem::path base = manifest.parent_path();
  std::vector<CodeSample> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ManifestError(manifest.string() + ":" + std::to_string(line_no) +
                          ": " + e.what());
    }
    CodeSample s = SampleFromJson(record);
    std::filesystem::path p(s.path);
    s.source = ReadFile(p.is_absolute() ? p : base / p);
    if (std::string problem = CheckSample(s); !problem.empty()) {
      throw ManifestError(manifest.string() + ":" + std::to_string(line_no) + ": " + problem);
    }
    samples.push_back(std::move(s));
  }
  return samples;
}

void WriteManifest(const std::filesystem::path& manifest,
                   const std::vector<CodeSample>& samples) {
  std::string out;
  for (const CodeSample& s : samples) {
    out += SampleToJson(s).dump();
    out += '\n';
  }
  WriteFile(manifest, out);
}

}  // namespace viperkit::frontend
