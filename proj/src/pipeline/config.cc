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

#include "viperkit/pipeline/config.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "viperkit/frontend/sample.h"

namespace viperkit::pipeline {

namespace {

std::string Trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename Int>
Int ParseInteger(std::string_view key, std::string_view value) {
  Int v{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(std::string(key) + ": not an integer: " + std::string(value));
  }
  return v;
}

eval::Rational ParsePercent(std::string_view key, std::string_view value) {
  auto r = eval::ParseRational(value);
  if (!r || *r < 0 || *r > 100) {
    throw ConfigError(std::string(key) + ": expected a number in [0, 100]: " + std::string(value));
  }
  return *r;
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(std::string(key) + ": expected true or false");
}

}  // namespace

cpg::SizeofModel RunConfig::Sizes() const {
  cpg::SizeofModel m;
  for (const auto& [type, bytes] : sizeof_overrides) m.Set(type, bytes);
  return m;
}

bool RunConfig::Enabled(detect::FeatureId f) const {
  return std::find(features.begin(), features.end(), f) != features.end();
}

bool RunConfig::Enabled(perturb::VariantKind k) const {
  return std::find(sf_kinds.begin(), sf_kinds.end(), k) != sf_kinds.end();
}

std::vector<std::string> RunConfig::Disabled() const {
  std::vector<std::string> out;
  for (detect::FeatureId f : detect::kAllFeatures) {
    if (!Enabled(f)) out.emplace_back(detect::FeatureName(f));
  }
  for (perturb::VariantKind k : perturb::kSfKinds) {
    if (!Enabled(k)) out.emplace_back(perturb::VariantKindName(k));
  }
  return out;
}

void SetConfigValue(RunConfig* c, std::string_view key, std::string_view value) {
  if (key == "corpus") {
    c->corpus = std::string(value);
  } else if (key == "out") {
    c->out = std::string(value);
  } else if (key == "features") {
    c->features.clear();
    c->sf_kinds.clear();
    std::stringstream list{std::string(value)};
    std::string item;
    while (std::getline(list, item, ',')) {
      item = Trim(item);
      if (item.empty()) continue;
      if (item == "all") {
        c->features.assign(detect::kAllFeatures.begin(), detect::kAllFeatures.end());
        c->sf_kinds.assign(perturb::kSfKinds.begin(), perturb::kSfKinds.end());
      } else if (auto f = detect::ParseFeature(item)) {
        if (!c->Enabled(*f)) c->features.push_back(*f);
      } else if (auto k = perturb::ParseVariantKind(item); k && perturb::IsSfKind(*k)) {
        if (!c->Enabled(*k)) c->sf_kinds.push_back(*k);
      } else {
        throw ConfigError("features: unknown feature " + item);
      }
    }
    // Canonical order keeps report rows stable whatever the list order.
    std::vector<detect::FeatureId> fs;
    for (detect::FeatureId f : detect::kAllFeatures) {
      if (c->Enabled(f)) fs.push_back(f);
    }
    std::vector<perturb::VariantKind> ks;
    for (perturb::VariantKind k : perturb::kSfKinds) {
      if (c->Enabled(k)) ks.push_back(k);
    }
    c->features = std::move(fs);
    c->sf_kinds = std::move(ks);
  } else if (key == "epsilon") {
    c->thresholds.epsilon = ParsePercent(key, value);
  } else if (key == "fep_floor") {
    c->thresholds.fep_floor = ParsePercent(key, value);
  } else if (key == "fpp_reference_mean") {
    c->fpp_reference_mean = ParsePercent(key, value);
  } else if (key == "include_partial_fep") {
    c->include_partial_fep = ParseBool(key, value);
  } else if (key.starts_with("sizeof.")) {
    std::int64_t bytes = ParseInteger<std::int64_t>(key, value);
    if (bytes <= 0) throw ConfigError(std::string(key) + ": size must be positive");
    c->sizeof_overrides[std::string(key.substr(7))] = bytes;
  } else if (key == "seed") {
    c->seed = ParseInteger<std::uint64_t>(key, value);
  } else if (key == "workers") {
    c->workers = ParseInteger<int>(key, value);
    if (c->workers < 1) throw ConfigError("workers: must be at least 1");
  } else if (key == "samples") {
    c->samples = ParseInteger<int>(key, value);
    if (c->samples < 0) throw ConfigError("samples: must be non-negative");
  } else if (key == "max_skip_rate") {
    auto r = eval::ParseRational(value);
    if (!r || *r < 0 || *r > 1) throw ConfigError("max_skip_rate: expected a number in [0, 1]");
    c->max_skip_rate = *r;
  } else if (key == "detector") {
    c->detector = std::string(value);
  } else if (key == "predictions") {
    c->predictions = std::string(value);
  } else if (key == "format") {
    if (value != "table" && value != "structured") {
      throw ConfigError("format: expected table or structured");
    }
    c->format = std::string(value);
  } else {
    throw ConfigError("unknown key " + std::string(key));
  }
}

void ApplyConfigText(RunConfig* config, std::string_view text) {
  std::stringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = Trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    }
    try {
      SetConfigValue(config, Trim(t.substr(0, eq)), Trim(t.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

RunConfig LoadDefaultConfig() {
  RunConfig config;
  if (const char* path = std::getenv("VIPERKIT_CONFIG"); path != nullptr && *path != '\0') {
    try {
      ApplyConfigText(&config, frontend::ReadFile(path));
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(path) + ": " + e.what());
    }
  }
  return config;
}

}  // namespace viperkit::pipeline
