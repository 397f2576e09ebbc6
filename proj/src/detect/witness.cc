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

#include "viperkit/detect/witness.h"

#include <stdexcept>
#include <tuple>

namespace viperkit::detect {

namespace {

using cpg::ConstValue;
using Names = std::vector<std::string>;

struct Schema {
  Names lines;
  Names vars;
  Names constants;
  std::string anchor;
};

const Schema& SchemaFor(FeatureId f) {
  static const Schema kSchemas[] = {
      {{"def_line", "use_line"}, {"dest"}, {"LEN_d", "n"}, "use_line"},
      {{"def_line", "src_def_line", "use_line"}, {"dest", "src"}, {"LEN_d", "LEN_s", "n"},
       "use_line"},
      {{"def_line", "use_line"}, {"dest"}, {"LEN_d", "n"}, "use_line"},
      {{"src_def_line", "use_line"}, {"src"}, {"LEN_s", "n"}, "use_line"},
      {{"first_free_line", "second_free_line"}, {"buffer"}, {}, "second_free_line"},
      {{"dealloc_line", "use_line"}, {"buffer"}, {}, "use_line"},
      {{"access_line"}, {"buffer", "index"}, {}, "access_line"},
      {{"access_line"}, {"buffer", "index"}, {}, "access_line"},
      {{"call_line"}, {"callee"}, {}, "call_line"},
      {{"call_line"}, {"callee"}, {}, "call_line"},
  };
  return kSchemas[static_cast<int>(f)];
}

std::vector<std::string> ConstantStrings(const FeatureWitness& w) {
  std::vector<std::string> out;
  for (const auto& [k, v] : w.constants) out.push_back(k + "=" + v.ToString());
  return out;
}

}  // namespace

int FeatureWitness::AnchorLine() const {
  auto it = lines.find(SchemaFor(feature).anchor);
  return it == lines.end() ? 0 : it->second;
}

bool WitnessLess(const FeatureWitness& a, const FeatureWitness& b) {
  auto key = [](const FeatureWitness& w) {
    return std::make_tuple(w.sample_id, w.AnchorLine(), w.feature, w.function, w.lines,
                           w.vars, ConstantStrings(w));
  };
  return key(a) < key(b);
}

const std::vector<std::string>& RequiredLines(FeatureId f) { return SchemaFor(f).lines; }
const std::vector<std::string>& RequiredVars(FeatureId f) { return SchemaFor(f).vars; }
const std::vector<std::string>& RequiredConstants(FeatureId f) {
  return SchemaFor(f).constants;
}
std::string_view AnchorName(FeatureId f) { return SchemaFor(f).anchor; }

bool IbsHolds(std::int64_t len_d, std::int64_t n) { return len_d < n; }
bool BsbHolds(std::int64_t len_d, std::int64_t len_s, std::int64_t n) {
  return len_d < n && n == len_s;
}
bool OeHolds(std::int64_t len_d, std::int64_t n) { return len_d < n && n - 1 == len_d; }
bool BoHolds(std::int64_t len_s, std::int64_t n) { return len_s < n; }

std::string CheckWitness(const FeatureWitness& w) {
  const Schema& s = SchemaFor(w.feature);
  for (const std::string& l : s.lines) {
    auto it = w.lines.find(l);
    if (it == w.lines.end() || it->second <= 0) return "missing line anchor " + l;
  }
  for (const std::string& v : s.vars) {
    auto it = w.vars.find(v);
    if (it == w.vars.end() || it->second.empty()) return "missing variable " + v;
  }
  for (const std::string& c : s.constants) {
    auto it = w.constants.find(c);
    if (it == w.constants.end() || !it->second.known()) return "missing constant " + c;
  }
  auto get = [&](const char* name) { return w.constants.at(name).value(); };
  bool ok = true;
  switch (w.feature) {
    case FeatureId::kIBS:
      ok = IbsHolds(get("LEN_d"), get("n"));
      break;
    case FeatureId::kBSB:
      ok = BsbHolds(get("LEN_d"), get("LEN_s"), get("n"));
      break;
    case FeatureId::kOE:
      ok = OeHolds(get("LEN_d"), get("n"));
      break;
    case FeatureId::kBO:
      ok = BoHolds(get("LEN_s"), get("n"));
      break;
    default:
      break;
  }
  return ok ? "" : "constants violate the rule predicate";
}

nlohmann::json WitnessToJson(const FeatureWitness& w) {
  nlohmann::json constants = nlohmann::json::object();
  for (const auto& [k, v] : w.constants) {
    constants[k] = v.known() ? nlohmann::json(v.value()) : nlohmann::json("UNKNOWN");
  }
  return {{"sample_id", w.sample_id},
          {"feature", FeatureName(w.feature)},
          {"function", w.function},
          {"lines", w.lines},
          {"vars", w.vars},
          {"constants", constants}};
}

FeatureWitness WitnessFromJson(const nlohmann::json& j) {
  FeatureWitness w;
  w.sample_id = j.at("sample_id").get<std::string>();
  auto f = ParseFeature(j.at("feature").get<std::string>());
  if (!f) throw std::invalid_argument("unknown feature " + j.at("feature").dump());
  w.feature = *f;
  w.function = j.at("function").get<std::string>();
  w.lines = j.at("lines").get<std::map<std::string, int>>();
  w.vars = j.at("vars").get<std::map<std::string, std::string>>();
  for (const auto& [k, v] : j.at("constants").items()) {
    w.constants[k] = v.is_number_integer() ? ConstValue::Of(v.get<std::int64_t>())
                                           : ConstValue::Unknown();
  }
  return w;
}

}  // namespace viperkit::detect
