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

#ifndef VIPERKIT_PERTURB_VARIANT_H_
#define VIPERKIT_PERTURB_VARIANT_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "viperkit/detect/feature.h"
#include "viperkit/detect/witness.h"
#include "viperkit/frontend/sample.h"

namespace viperkit::perturb {

enum class VariantKind : std::uint8_t {
  kFPP,
  kFEP,
  kSfNodeSet,
  kSfEdgeSet,
  kSfIdentifier,
  kSfFormatting,
};

inline constexpr std::array<VariantKind, 4> kSfKinds = {
    VariantKind::kSfNodeSet, VariantKind::kSfEdgeSet, VariantKind::kSfIdentifier,
    VariantKind::kSfFormatting};

// "FPP", "FEP", "SF_NODE_SET", "SF_EDGE_SET", "SF_IDENTIFIER", "SF_FORMATTING".
std::string_view VariantKindName(VariantKind kind);
std::optional<VariantKind> ParseVariantKind(std::string_view name);
bool IsSfKind(VariantKind kind);

// User identifier -> symbolic name, split by role.
struct SymbolMap {
  std::map<std::string, std::string> variables;
  std::map<std::string, std::string> functions;

  // The symbolic name, or `name` itself when it is not mapped.
  std::string Rename(const std::string& name) const;
  bool empty() const { return variables.empty() && functions.empty(); }
  friend bool operator==(const SymbolMap&, const SymbolMap&) = default;
};

struct PerturbedVariant {
  std::string variant_id;
  std::string parent;
  VariantKind kind = VariantKind::kFPP;
  std::optional<detect::FeatureId> feature;  // nullopt for SF kinds
  std::string source;
  frontend::Label expected_label = frontend::Label::kNonVulnerable;
  std::string recipe;
  // Parent's vulnerable lines moved through line_map.
  std::optional<std::set<int>> vulnerable_lines;
  // FEP that removed the target feature but left other witnesses.
  bool partial = false;
  // Path of the variant file relative to the variant manifest.
  std::string path;

  // Working state, not serialized.
  std::vector<int> line_map;                     // parent line - 1 -> variant line
  std::optional<detect::FeatureWitness> target;  // FPP/FEP
  std::optional<SymbolMap> symbols;              // SF_IDENTIFIER
};

// <sample_id>__<feature>__<kind>__<k>; SF variants use NONE as the feature.
std::string MakeVariantId(const std::string& sample_id, std::optional<detect::FeatureId> feature,
                          VariantKind kind, int k);

// Moves a line set through a line map, dropping deleted lines.
std::set<int> MapLines(const std::set<int>& lines, const std::vector<int>& line_map);

// Manifest record; the source is stored in the file named by `path`.
nlohmann::json VariantToJson(const PerturbedVariant& v);
PerturbedVariant VariantFromJson(const nlohmann::json& j);

void WriteVariantManifest(const std::filesystem::path& manifest,
                          const std::vector<PerturbedVariant>& variants);
// Reads the records and, when load_sources is set, each variant's file.
std::vector<PerturbedVariant> ReadVariantManifest(const std::filesystem::path& manifest,
                                                  bool load_sources = true);

}  // namespace viperkit::perturb

#endif  // VIPERKIT_PERTURB_VARIANT_H_
