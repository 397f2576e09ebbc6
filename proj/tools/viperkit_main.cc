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

// viperkit: corpus generation, feature detection, perturbation and
// detector evaluation from the command line.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "viperkit/pipeline/commands.h"
#include "viperkit/pipeline/config.h"

namespace {

using viperkit::pipeline::RunConfig;
using Command = int (*)(const RunConfig&, std::ostream&, std::ostream&);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feature-level robustness testing for vulnerability detectors"};
  app.require_subcommand(1);
  app.fallthrough();

  // Flag name -> config key. Only flags given on the command line override
  // the config file.
  std::map<std::string, std::string> flags;
  auto add = [&](const std::string& flag, const std::string& key, const std::string& help) {
    app.add_option_function<std::string>(
        "--" + flag, [&flags, key](const std::string& v) { flags[key] = v; }, help);
  };
  add("corpus", "corpus", "Corpus manifest or directory holding manifest.jsonl");
  add("out", "out", "Output directory");
  add("features", "features", "Comma list of enabled rules and SF kinds, e.g. IBS,UAF,SF_NODE_SET");
  add("epsilon", "epsilon", "FPP tolerance below the reference mean, in percent");
  add("fep-floor", "fep_floor", "Lowest SR_FEP counted as high, in percent");
  add("fpp-reference-mean", "fpp_reference_mean", "Fixed reference mean for SR_FPP");
  add("include-partial-fep", "include_partial_fep", "Count FEPs that leave other features (true/false)");
  add("seed", "seed", "Seed for corpus generation and the random detector");
  add("workers", "workers", "Worker threads");
  add("samples", "samples", "Synthetic corpus size (at least 40)");
  add("max-skip-rate", "max_skip_rate", "Largest share of unanalyzable samples detect accepts");
  add("detector", "detector", "oracle, constant_vulnerable, constant_benign or random:<seed>");
  add("predictions", "predictions", "Predictions file (JSONL) to evaluate");
  add("format", "format", "table or structured");
  std::vector<std::string> sizes;
  app.add_option("--sizeof", sizes, "Override a type size, e.g. int=2 or pointer=4");

  const std::vector<std::pair<std::string, std::pair<std::string, Command>>> commands = {
      {"gen-corpus", {"Write a synthetic annotated corpus to --out", viperkit::pipeline::CmdGenCorpus}},
      {"detect", {"Run the feature rules over --corpus", viperkit::pipeline::CmdDetect}},
      {"validate", {"Compare detected features with FLAW/FIX comments", viperkit::pipeline::CmdValidate}},
      {"perturb", {"Generate and self-check FPP, FEP and SF variants", viperkit::pipeline::CmdPerturb}},
      {"predict", {"Label originals and variants with a reference detector", viperkit::pipeline::CmdPredict}},
      {"evaluate", {"Score predictions against the variants", viperkit::pipeline::CmdEvaluate}},
      {"report", {"Print the last evaluation report", viperkit::pipeline::CmdReport}},
  };
  for (const auto& [name, entry] : commands) app.add_subcommand(name, entry.first);

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig config = viperkit::pipeline::LoadDefaultConfig();
    for (const auto& [key, value] : flags) viperkit::pipeline::SetConfigValue(&config, key, value);
    for (const std::string& s : sizes) {
      std::size_t eq = s.find('=');
      if (eq == std::string::npos) throw viperkit::pipeline::ConfigError("--sizeof expects TYPE=N");
      viperkit::pipeline::SetConfigValue(&config, "sizeof." + s.substr(0, eq), s.substr(eq + 1));
    }
    for (const auto& [name, entry] : commands) {
      if (app.got_subcommand(name)) return entry.second(config, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
