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

#include "viperkit/eval/prediction.h"

#include <fstream>

#include <nlohmann/json.hpp>

namespace viperkit::eval {

void PredictionSet::Add(const std::string& id, frontend::Label label) {
  if (!labels_.emplace(id, label).second) {
    throw std::invalid_argument("duplicate prediction for " + id + " from " + detector_id_);
  }
}

std::optional<frontend::Label> PredictionSet::Get(const std::string& id) const {
  auto it = labels_.find(id);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

MissingPrediction::MissingPrediction(std::string detector_id, std::vector<std::string> ids)
    : std::runtime_error(detector_id + ": " + std::to_string(ids.size()) +
                         " ids without a prediction"),
      detector_id_(std::move(detector_id)),
      ids_(std::move(ids)) {}

std::vector<PredictionSet> ReadPredictions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::map<std::string, PredictionSet> sets;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string where = path.string() + ":" + std::to_string(lineno) + ": ";
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(where + e.what());
    }
    if (!j.is_object() || !j.contains("id") || !j.contains("predicted_label") ||
        !j.contains("detector_id")) {
      throw std::runtime_error(where + "expected id, predicted_label and detector_id");
    }
    auto label = frontend::ParseLabel(j["predicted_label"].get<std::string>());
    if (!label) throw std::runtime_error(where + "unknown label");
    std::string detector = j["detector_id"].get<std::string>();
    auto it = sets.try_emplace(detector, detector).first;
    try {
      it->second.Add(j["id"].get<std::string>(), *label);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(where + e.what());
    }
  }
  std::vector<PredictionSet> out;
  for (auto& [id, set] : sets) out.push_back(std::move(set));
  return out;
}

std::string PredictionsToJsonl(const PredictionSet& set) {
  std::string out;
  for (const auto& [id, label] : set.labels()) {
    nlohmann::json j = {{"id", id},
                        {"predicted_label", frontend::LabelName(label)},
                        {"detector_id", set.detector_id()}};
    out += j.dump() + "\n";
  }
  return out;
}

void WritePredictions(const std::filesystem::path& path, const std::vector<PredictionSet>& sets) {
  std::string out;
  for (const PredictionSet& s : sets) out += PredictionsToJsonl(s);
  frontend::WriteFile(path, out);
}

}  // namespace viperkit::eval
