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

#ifndef VIPERKIT_EVAL_PREDICTION_H_
#define VIPERKIT_EVAL_PREDICTION_H_

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "viperkit/frontend/sample.h"

namespace viperkit::eval {

// One line of a predictions file:
//   {"id": "...", "predicted_label": "vulnerable", "detector_id": "..."}
struct PredictionRecord {
  std::string id;
  frontend::Label predicted_label = frontend::Label::kNonVulnerable;
  std::string detector_id;
  friend bool operator==(const PredictionRecord&, const PredictionRecord&) = default;
};

// The predictions of one detector, keyed by sample or variant id.
class PredictionSet {
 public:
  PredictionSet() = default;
  explicit PredictionSet(std::string detector_id) : detector_id_(std::move(detector_id)) {}

  const std::string& detector_id() const { return detector_id_; }
  // Throws std::invalid_argument on a second record for the same id.
  void Add(const std::string& id, frontend::Label label);
  std::optional<frontend::Label> Get(const std::string& id) const;
  std::size_t size() const { return labels_.size(); }
  const std::map<std::string, frontend::Label>& labels() const { return labels_; }

 private:
  std::string detector_id_;
  std::map<std::string, frontend::Label> labels_;
};

class MissingPrediction : public std::runtime_error {
 public:
  MissingPrediction(std::string detector_id, std::vector<std::string> ids);
  const std::string& detector_id() const { return detector_id_; }
  const std::vector<std::string>& ids() const { return ids_; }

 private:
  std::string detector_id_;
  std::vector<std::string> ids_;
};

// Groups records by detector, in detector-id order.
std::vector<PredictionSet> ReadPredictions(const std::filesystem::path& path);
void WritePredictions(const std::filesystem::path& path, const std::vector<PredictionSet>& sets);
std::string PredictionsToJsonl(const PredictionSet& set);

}  // namespace viperkit::eval

#endif  // VIPERKIT_EVAL_PREDICTION_H_
