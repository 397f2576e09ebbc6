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

// Acceptance gate: runs each release criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "testing/oracles.h"
#include "viperkit/cpg/builder.h"
#include "viperkit/cpg/const_eval.h"
#include "viperkit/detect/detector.h"
#include "viperkit/eval/metrics.h"
#include "viperkit/eval/reference.h"
#include "viperkit/eval/report.h"
#include "viperkit/frontend/parser.h"
#include "viperkit/perturb/self_check.h"
#include "viperkit/perturb/sf_perturb.h"
#include "viperkit/pipeline/commands.h"
#include "viperkit/pipeline/corpus_gen.h"

namespace viperkit {
namespace {

namespace fs = std::filesystem;
using detect::FeatureId;
using detect::FeatureWitness;
using eval::Rational;
using frontend::CodeSample;
using frontend::Label;
using perturb::PerturbedVariant;
using perturb::VariantKind;
using pipeline::RunConfig;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Collects failure reasons; the first few are kept for the summary line.
class Failures {
 public:
  void Add(const std::string& why) {
    if (count_++ < 3) reasons_ += (reasons_.empty() ? "" : "; ") + why;
  }
  bool empty() const { return count_ == 0; }
  std::string Describe() const {
    return std::to_string(count_) + " failure(s): " + reasons_;
  }

 private:
  int count_ = 0;
  std::string reasons_;
};

// Shared inputs, built once.
const std::vector<CodeSample>& WideCorpus() {
  static const std::vector<CodeSample> corpus = pipeline::GenerateCorpus({200, 1});
  return corpus;
}

const pipeline::PerturbOutcome& WideVariants() {
  static const pipeline::PerturbOutcome outcome = [] {
    RunConfig config;
    return pipeline::PerturbCorpus(pipeline::DetectCorpus(WideCorpus(), config), config);
  }();
  return outcome;
}

std::vector<FeatureWitness> Detect(const std::string& id, const std::string& source,
                                   const std::optional<std::set<int>>& lines) {
  detect::DetectionOutcome out = detect::DetectSource(id, source, lines);
  if (out.error) throw std::runtime_error(id + ": " + *out.error);
  return out.witnesses;
}

// ---- 1 ----
Verdict DetectionFidelity() {
  Clock::time_point start = Clock::now();
  std::vector<CodeSample> corpus = pipeline::GenerateCorpus({});
  RunConfig config;
  std::vector<pipeline::DetectedSample> detected = pipeline::DetectCorpus(corpus, config);
  std::vector<pipeline::FeatureScore> scores = pipeline::ScoreDetection(detected, config);
  detect::ValidationReport validation = pipeline::ValidateCorpus(detected);
  double elapsed = Seconds(start);

  Failures f;
  if (corpus.size() < 40) f.Add("corpus has " + std::to_string(corpus.size()) + " samples");
  for (FeatureId feature : detect::kAllFeatures) {
    int bad = 0, good = 0;
    for (const CodeSample& s : corpus) {
      if (s.cwe != std::string(detect::FeatureCwe(feature))) continue;
      (s.label == Label::kVulnerable ? bad : good)++;
    }
    if (bad < 2 || good < 2) f.Add(std::string(detect::FeatureName(feature)) + " under-covered");
  }
  for (const pipeline::FeatureScore& s : scores) {
    if (s.Precision() != Rational(1) || s.Recall() != Rational(1)) {
      f.Add(std::string(detect::FeatureName(s.feature)) + " P/R below 1");
    }
  }
  if (validation.agreement_rate != Rational(1)) f.Add("validation agreement below 1");
  if (elapsed >= 10) f.Add("took " + std::to_string(elapsed) + " s");
  std::ostringstream d;
  d << corpus.size() << " samples, P=R=1.00 on " << scores.size()
    << " features, agreement " << validation.agreed << "/" << validation.compared << ", "
    << static_cast<int>(elapsed * 1000) << " ms";
  return {f.empty(), f.empty() ? d.str() : f.Describe()};
}

// ---- 2 ----
Verdict KillAndKeep() {
  const pipeline::PerturbOutcome& o = WideVariants();
  Failures f;
  for (const std::string& why : o.failures) f.Add("self-check: " + why);
  int fep = 0, fpp = 0, killed = 0, kept = 0;
  std::set<std::pair<FeatureId, VariantKind>> seen;
  for (const PerturbedVariant& v : o.variants) {
    if (!v.feature) continue;
    seen.insert({*v.feature, v.kind});
    std::vector<FeatureWitness> ws = Detect(v.parent, v.source, v.vulnerable_lines);
    if (v.kind == VariantKind::kFEP) {
      ++fep;
      bool any = std::any_of(ws.begin(), ws.end(),
                             [&](const FeatureWitness& w) { return w.feature == *v.feature; });
      if (any) {
        f.Add(v.variant_id + " keeps its feature");
      } else {
        ++killed;
      }
    } else {
      ++fpp;
      int anchor = v.line_map.at(v.target->AnchorLine() - 1);
      bool any = std::any_of(ws.begin(), ws.end(), [&](const FeatureWitness& w) {
        return w.feature == *v.feature && w.AnchorLine() == anchor;
      });
      if (any) {
        ++kept;
      } else {
        f.Add(v.variant_id + " lost its feature");
      }
    }
  }
  for (FeatureId feature : detect::kAllFeatures) {
    if (!seen.count({feature, VariantKind::kFEP})) {
      f.Add(std::string(detect::FeatureName(feature)) + " has no FEP");
    }
    if (feature != FeatureId::kRA && !seen.count({feature, VariantKind::kFPP})) {
      f.Add(std::string(detect::FeatureName(feature)) + " has no FPP");
    }
  }
  std::ostringstream d;
  d << "FEP killed " << killed << "/" << fep << ", FPP kept " << kept << "/" << fpp;
  return {f.empty(), f.empty() ? d.str() : f.Describe()};
}

// ---- 3 ----
std::vector<FeatureWitness> Normalize(std::vector<FeatureWitness> ws) {
  for (FeatureWitness& w : ws) w.sample_id.clear();
  std::sort(ws.begin(), ws.end(), detect::WitnessLess);
  return ws;
}

Verdict SfNeutrality() {
  Failures f;
  int samples = 0, variants = 0, noops = 0;
  for (const CodeSample& s : WideCorpus()) {
    std::vector<FeatureWitness> parent = Detect(s.sample_id, s.source, s.vulnerable_lines);
    std::vector<PerturbedVariant> vs = {perturb::GenSfNodeSet(s), perturb::GenSfEdgeSet(s),
                                        perturb::GenSfIdentifier(s).first};
    perturb::FormattingVariant fmt = perturb::GenSfFormatting(s);
    if (fmt.noop) {
      ++noops;  // identical text, neutral by construction
    } else {
      vs.push_back(fmt.variant);
    }
    bool ok = true;
    for (const PerturbedVariant& v : vs) {
      std::vector<FeatureWitness> want;
      for (const FeatureWitness& w : parent) {
        want.push_back(perturb::MapWitness(w, v.line_map, v.symbols ? &*v.symbols : nullptr));
      }
      std::vector<FeatureWitness> got = Detect(s.sample_id, v.source, v.vulnerable_lines);
      ++variants;
      if (Normalize(want) != Normalize(got)) {
        ok = false;
        f.Add(v.variant_id + " changes the witness set");
      }
    }
    samples += ok;
  }
  std::ostringstream d;
  d << samples << "/" << WideCorpus().size() << " samples neutral over " << variants
    << " SF variants (" << noops << " formatting no-ops)";
  return {f.empty(), f.empty() ? d.str() : f.Describe()};
}

// ---- 4 and 5 ----
eval::EvaluationReport EvaluateReference(const std::string& spec) {
  RunConfig config;
  const pipeline::PerturbOutcome& o = WideVariants();
  eval::PredictionSet p =
      pipeline::Predict(*eval::ReferenceDetector::Parse(spec), WideCorpus(), o.variants, config);
  eval::EvaluationReport r;
  r.corpus.samples = static_cast<std::int64_t>(WideCorpus().size());
  r.corpus.variants = static_cast<std::int64_t>(o.variants.size());
  r.detectors.push_back(eval::EvaluateDetector(
      pipeline::MakeEvaluationInput(WideCorpus(), o.variants, config), p,
      pipeline::MakeEvaluationOptions(config)));
  return r;
}

Verdict ConstantVulnerablePattern() {
  eval::EvaluationReport r = EvaluateReference("constant_vulnerable");
  const eval::DetectorReport& d = r.detectors[0];
  Failures f;
  int both = 0;
  bool ra_seen = false;
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    const eval::SatisfactionResult& row = d.rows[i];
    if (!detect::ParseFeature(row.row)) continue;
    if (row.t_fpp > 0 && row.t_fep > 0) {
      ++both;
      if (eval::FormatPercent(row.SrFpp()) != "100.00" ||
          eval::FormatPercent(row.SrFep()) != "0.00" || d.categories[i] != eval::Category::kHL) {
        f.Add(row.row + " is " + eval::FormatPercent(row.SrFpp()) + "/" +
              eval::FormatPercent(row.SrFep()) + " " +
              std::string(eval::CategoryName(d.categories[i])));
      }
    }
    if (row.row == "RA") {
      ra_seen = true;
      if (eval::FormatPercent(row.SrFpp()) != "-" ||
          d.categories[i] != eval::Category::kUnclassified) {
        f.Add("RA row is not '-' / UNCLASSIFIED");
      }
    }
  }
  if (!ra_seen) f.Add("no RA row");
  if (both != 9) f.Add(std::to_string(both) + " features with both kinds, expected 9");
  std::string table = eval::RenderTable(r);
  std::size_t ra = table.find("\nRA ");
  if (ra == std::string::npos || table.find(" - ", ra) > table.find('\n', ra + 1)) {
    f.Add("table RA row lacks '-'");
  }
  std::ostringstream d2;
  d2 << both << " features at 100.00/0.00 HL, RA '-' UNCLASSIFIED";
  return {f.empty(), f.empty() ? d2.str() : f.Describe()};
}

Verdict OracleCeiling() {
  eval::EvaluationReport r = EvaluateReference("oracle");
  const eval::DetectorReport& d = r.detectors[0];
  Failures f;
  int rows = 0;
  for (const eval::SatisfactionResult& row : d.rows) {
    ++rows;
    if (row.SrF() != Rational(100)) f.Add(row.row + " SR_f " + eval::FormatPercent(row.SrF()));
  }
  if (d.accuracy.precision_delta != Rational(0) || d.accuracy.recall_delta != Rational(0)) {
    f.Add("accuracy delta is not (0, 0)");
  }
  std::ostringstream d2;
  d2 << rows << " rows at SR_f 100.00, accuracy_delta (0.00, 0.00)";
  return {f.empty(), f.empty() ? d2.str() : f.Describe()};
}

// ---- 6 ----
Verdict FormulaIdentities() {
  Failures f;
  std::mt19937_64 rng(6);
  auto upto = [&](std::int64_t n) { return std::uniform_int_distribution<std::int64_t>(0, n)(rng); };
  int checked = 0;
  while (checked < 1000) {
    eval::SatisfactionResult r;
    r.t_fpp = upto(60);
    r.t_fep = upto(60);
    if (r.t_fpp + r.t_fep == 0) continue;
    r.kept_fpp = upto(r.t_fpp);
    r.flipped_fep = upto(r.t_fep);
    ++checked;
    Rational weighted = 0;
    if (r.SrFpp()) weighted += Rational(r.t_fpp) * *r.SrFpp();
    if (r.SrFep()) weighted += Rational(r.t_fep) * *r.SrFep();
    weighted /= r.t_fpp + r.t_fep;
    if (r.SrF() != weighted) f.Add("tuple " + std::to_string(checked));
  }

  // Hand example through the tally path: 3 FPPs all kept, 2 FEPs one flipped.
  std::vector<PerturbedVariant> vs;
  eval::PredictionSet p("hand");
  p.Add("s", Label::kVulnerable);
  for (int k = 1; k <= 5; ++k) {
    PerturbedVariant v;
    v.parent = "s";
    v.feature = FeatureId::kIBS;
    v.kind = k <= 3 ? VariantKind::kFPP : VariantKind::kFEP;
    v.variant_id = perturb::MakeVariantId("s", v.feature, v.kind, k);
    p.Add(v.variant_id, k == 4 ? Label::kNonVulnerable : Label::kVulnerable);
    vs.push_back(v);
  }
  eval::SatisfactionResult hand = eval::FeatureSatisfaction(FeatureId::kIBS, vs, p);
  std::string got = eval::FormatPercent(hand.SrF()) + "/" + eval::FormatPercent(hand.SrFpp()) +
                    "/" + eval::FormatPercent(hand.SrFep());
  if (got != "80.00/100.00/50.00") f.Add("hand example gave " + got);
  return {f.empty(), f.empty() ? "1000 tuples exact; (3,2)/(3,1) -> " + got : f.Describe()};
}

// ---- 7 ----
Verdict GraphOracles() {
  Failures f;
  int functions = 0, small = 0;
  for (const CodeSample& s : WideCorpus()) {
    auto ast = std::make_shared<const frontend::Ast>(frontend::Parse(s.source));
    for (const cpg::PropertyGraph& g : cpg::BuildAllCpgs(ast)) {
      // Larger functions are checked as well; the criterion counts the small ones.
      ++functions;
      small += testing::StatementCount(g) <= 12;
      std::string diff = testing::CheckDependenceEdges(g);
      if (!diff.empty()) f.Add(s.sample_id + ": " + diff);
    }
  }
  if (small == 0) f.Add("no function with at most 12 statements");

  cpg::SizeofModel sizes;
  auto eval = [&](const std::string& text) {
    frontend::Ast ast = frontend::ParseExpression(text);
    cpg::EvalContext ctx{&ast, &sizes, {}};
    return cpg::EvalConst(ctx, ast.expression_root());
  };
  cpg::ConstValue fig = eval("10*sizeof(int)");
  if (!fig.known() || fig.value() != 40) f.Add("10*sizeof(int) gave " + fig.ToString());
  std::mt19937_64 rng(7);
  int known = 0;
  for (int i = 0; i < 1000; ++i) {
    testing::ConstExprOracle o = testing::RandomConstExpr(rng, 1 + i % 5);
    cpg::ConstValue v = eval(o.text);
    if (v.known() != o.value.has_value() ||
        (v.known() && boost::multiprecision::cpp_int(v.value()) != *o.value)) {
      f.Add("eval_const differs on " + o.text);
    }
    known += v.known();
  }
  std::ostringstream d;
  d << "DD/CD/PD exact on all " << functions << " corpus functions (" << small
    << " with <= 12 statements); 1000 expressions (" << known
    << " known) match, 10*sizeof(int) = 40";
  return {f.empty(), f.empty() ? d.str() : f.Describe()};
}

// ---- 8 ----
std::map<std::string, std::string> Snapshot(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) {
      files[fs::relative(e.path(), root).generic_string()] = frontend::ReadFile(e.path());
    }
  }
  return files;
}

// gen-corpus -> detect -> perturb -> evaluate (oracle) -> report, one worker.
std::pair<double, std::string> RunPipeline(const fs::path& dir) {
  fs::remove_all(dir);
  RunConfig config;
  config.samples = 1000;
  config.seed = 1;
  config.workers = 1;
  config.corpus = dir / "corpus";
  config.out = dir / "out";
  std::ostringstream out, err;
  Clock::time_point start = Clock::now();
  RunConfig gen = config;
  gen.out = config.corpus;
  using Cmd = int (*)(const RunConfig&, std::ostream&, std::ostream&);
  std::vector<std::pair<const char*, Cmd>> steps = {{"detect", pipeline::CmdDetect},
                                                    {"perturb", pipeline::CmdPerturb},
                                                    {"evaluate", pipeline::CmdEvaluate},
                                                    {"report", pipeline::CmdReport}};
  if (pipeline::CmdGenCorpus(gen, out, err) != 0) return {Seconds(start), "gen-corpus failed"};
  for (const auto& [name, cmd] : steps) {
    if (cmd(config, out, err) != 0) return {Seconds(start), std::string(name) + " failed: " + err.str()};
  }
  double elapsed = Seconds(start);
  // Console output is compared too, with the run directory factored out.
  std::string console = out.str();
  for (std::size_t at; (at = console.find(dir.string())) != std::string::npos;) {
    console.replace(at, dir.string().size(), "<dir>");
  }
  frontend::WriteFile(dir / "out" / "console.txt", console);
  return {elapsed, ""};
}

Verdict ScaleAndDeterminism() {
  fs::path base = fs::temp_directory_path() / "viperkit_acceptance";
  Failures f;
  auto [t1, e1] = RunPipeline(base / "run1");
  auto [t2, e2] = RunPipeline(base / "run2");
  if (!e1.empty()) f.Add(e1);
  if (!e2.empty()) f.Add(e2);
  if (t1 >= 60 || t2 >= 60) f.Add("slower than 60 s");
  std::size_t files = 0;
  if (f.empty()) {
    std::map<std::string, std::string> a = Snapshot(base / "run1");
    std::map<std::string, std::string> b = Snapshot(base / "run2");
    files = a.size();
    if (a.size() != b.size()) f.Add("different file sets");
    for (const auto& [path, bytes] : a) {
      auto it = b.find(path);
      if (it == b.end() || it->second != bytes) f.Add(path + " differs");
    }
  }
  fs::remove_all(base);
  std::ostringstream d;
  d.precision(2);
  d << std::fixed << "1000 samples in " << t1 << " s and " << t2 << " s, " << files
    << " files byte-identical";
  return {f.empty(), f.empty() ? d.str() : f.Describe()};
}

}  // namespace
}  // namespace viperkit

int main() {
  using viperkit::Verdict;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"detection fidelity", viperkit::DetectionFidelity},
      {"FEP kill / FPP keep", viperkit::KillAndKeep},
      {"SF neutrality", viperkit::SfNeutrality},
      {"constant_vulnerable pattern", viperkit::ConstantVulnerablePattern},
      {"oracle ceiling", viperkit::OracleCeiling},
      {"formula identities", viperkit::FormulaIdentities},
      {"graph-layer oracles", viperkit::GraphOracles},
      {"scale and determinism", viperkit::ScaleAndDeterminism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first
              << "): " << v.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
