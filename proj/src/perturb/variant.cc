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

#include "viperkit/perturb/variant.h"

#include <fstream>
#include <stdexcept>

namespace viperkit::perturb {
namespace {

constexpr std::array<std::pair<VariantKind, std::string_view>, 6> kNames = {{
    {VariantKind::kFPP, "FPP"},
    {VariantKind::kFEP, "FEP"},
    {VariantKind::kSfNodeSet, "SF_NODE_SET"},
    {VariantKind::kSfEdgeSet, "SF_EDGE_SET"},
    {VariantKind::kSfIdentifier, "SF_IDENTIFIER"},
    {VariantKind::kSfFormatting, "SF_FORMATTING"},
}};

}  // namespace

std::string_view VariantKindName(VariantKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<VariantKind> ParseVariantKind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool IsSfKind(VariantKind kind) {
  return kind != VariantKind::kFPP && kind != VariantKind::kFEP;
}

std::string SymbolMap::Rename(const std::string& name) const {
  if (auto it = variables.find(name); it != variables.end()) return it->second;
  if (auto it = functions.find(name); it != functions.end()) return it->second;
  return name;
}

std::string MakeVariantId(const std::string& sample_id, std::optional<detect::FeatureId> feature,
                          VariantKind kind, int k) {
  std::string f = feature ? std::string(detect::FeatureName(*feature)) : "NONE";
  return sample_id + "__" + f + "__" + std::string(VariantKindName(kind)) + "__" +
         std::to_string(k);
}

std::set<int> MapLines(const std::set<int>& lines, const std::vector<int>& line_map) {
  std::set<int> out;
  for (int l : lines) {
    if (l >= 1 && static_cast<std::size_t>(l) <= line_map.size() && line_map[l - 1] > 0) {
      out.insert(line_map[l - 1]);
    }
  }
  return out;
}

nlohmann::json VariantToJson(const PerturbedVariant& v) {
  nlohmann::json j;
  j["variant_id"] = v.variant_id;
  j["parent"] = v.parent;
  j["kind"] = VariantKindName(v.kind);
  j["feature"] = v.feature ? nlohmann::json(detect::FeatureName(*v.feature)) : nlohmann::json();
  j["expected_label"] = frontend::LabelName(v.expected_label);
  j["recipe"] = v.recipe;
  if (v.vulnerable_lines) {
    j["vulnerable_lines"] = *v.vulnerable_lines;
  } else {
    j["vulnerable_lines"] = nullptr;
  }
  j["partial"] = v.partial;
  j["path"] = v.path;
  return j;
}

PerturbedVariant VariantFromJson(const nlohmann::json& j) {
  PerturbedVariant v;
  v.variant_id = j.at("variant_id").get<std::string>();
  v.parent = j.at("parent").get<std::string>();
  auto kind = ParseVariantKind(j.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown variant kind in " + v.variant_id);
  v.kind = *kind;
  if (j.contains("feature") && !j["feature"].is_null()) {
    auto f = detect::ParseFeature(j["feature"].get<std::string>());
    if (!f) throw std::invalid_argument("unknown feature in " + v.variant_id);
    v.feature = *f;
  }
  auto label = frontend::ParseLabel(j.at("expected_label").get<std::string>());
  if (!label) throw std::invalid_argument("bad expected_label in " + v.variant_id);
  v.expected_label = *label;
  v.recipe = j.value("recipe", "");
  if (j.contains("vulnerable_lines") && !j["vulnerable_lines"].is_null()) {
    v.vulnerable_lines = j["vulnerable_lines"].get<std::set<int>>();
  }
  v.partial = j.value("partial", false);
  v.path = j.value("path", "");
  return v;
}

void WriteVariantManifest(const std::filesystem::path& manifest,
                          const std::vector<PerturbedVariant>& variants) {
  std::string out;
  for (const PerturbedVariant& v : variants) out += VariantToJson(v).dump() + "\n";
  frontend::WriteFile(manifest, out);
}

std::vector<PerturbedVariant> ReadVariantManifest(const std::filesystem::path& manifest,
                                                  bool load_sources) {
  std::ifstream in(manifest);
  if (!in) throw std::runtime_error("cannot open " + manifest.string());
  std::vector<PerturbedVariant> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(manifest.string() + ":" + std::to_string(lineno) + ": " +
                               e.what());
    }
    PerturbedVariant v = VariantFromJson(j);
    if (load_sources) v.source = frontend::ReadFile(manifest.parent_path() / v.path);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace viperkit::perturb
