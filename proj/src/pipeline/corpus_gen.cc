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

#include "viperkit/pipeline/corpus_gen.h"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>

namespace viperkit::pipeline {

using detect::FeatureId;
using frontend::CodeSample;

namespace {

struct Style {
  bool allman = true;
  std::string indent = "    ";
};

// Emits one statement per line and remembers line numbers.
class SourceWriter {
 public:
  explicit SourceWriter(Style style) : style_(std::move(style)) {}

  int Line(const std::string& text) {
    std::string pad;
    for (int i = 0; i < depth_; ++i) pad += style_.indent;
    lines_.push_back(text.empty() ? "" : pad + text);
    return static_cast<int>(lines_.size());
  }
  void Blank() { lines_.emplace_back(); }
  void Comment(const std::string& text) { Line("/* " + text + " */"); }

  void Open(const std::string& head) {
    if (style_.allman) {
      Line(head);
      Line("{");
    } else {
      Line(head + " {");
    }
    ++depth_;
  }
  void Close() {
    --depth_;
    Line("}");
  }

  std::string str() const {
    std::string out;
    for (const std::string& l : lines_) out += l + "\n";
    return out;
  }

 private:
  Style style_;
  int depth_ = 0;
  std::vector<std::string> lines_;
};

class Gen {
 public:
  Gen(std::uint64_t seed, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), 0x5eedu};
    rng_.seed(seq);
  }

  int Int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool Chance(int percent) { return Int(1, 100) <= percent; }
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(Int(0, static_cast<int>(v.size()) - 1))];
  }

  // Distinct names from the pools.
  std::string Name(const std::vector<std::string>& pool) {
    for (int tries = 0; tries < 50; ++tries) {
      std::string n = Pick(pool);
      if (std::find(used_.begin(), used_.end(), n) == used_.end()) {
        used_.push_back(n);
        return n;
      }
    }
    std::string n = Pick(pool) + std::to_string(used_.size());
    used_.push_back(n);
    return n;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<std::string> used_;
};

const std::vector<std::string> kBufferNames = {"data", "buffer", "dest", "dataBuffer", "buf",
                                               "dst", "target", "block", "payload", "chunk"};
const std::vector<std::string> kSourceNames = {"source", "src", "input", "srcBuf", "origin",
                                               "incoming"};
const std::vector<std::string> kCounterNames = {"count", "total", "steps", "acc", "n", "tally"};
const std::vector<std::string> kLoopNames = {"j", "k", "m", "idx2", "step"};
const std::vector<std::string> kIndexNames = {"index", "pos", "offset", "slot", "i", "dataIndex"};
const std::vector<std::string> kHelperNames = {"helperValue", "scaleCount", "nextStep", "adjust",
                                               "mixValue"};
const std::vector<std::string> kWords = {"begin", "copy done", "processing", "checkpoint",
                                         "finished", "stage two"};

// Statements that never touch the buffers and never index with a variable,
// so they add spurious structure without adding witnesses.
class Filler {
 public:
  Filler(Gen* g, SourceWriter* w, std::string counter, std::string loop, std::string helper)
      : g_(g), w_(w), counter_(std::move(counter)), loop_(std::move(loop)),
        helper_(std::move(helper)) {}

  void Emit(int max_statements) {
    int n = g_->Int(0, max_statements);
    for (int i = 0; i < n; ++i) One();
  }

 private:
  void One() {
    const std::string& c = counter_;
    switch (g_->Int(0, 6)) {
      case 0:
        w_->Line(c + " = " + c + " + " + std::to_string(g_->Int(1, 9)) + ";");
        break;
      case 1:
        w_->Line("printIntLine(" + c + ");");
        break;
      case 2:
        w_->Line("printLine(\"" + g_->Pick(kWords) + "\");");
        break;
      case 3:
        w_->Open("if (" + c + " > " + std::to_string(g_->Int(2, 50)) + ")");
        w_->Line("printLine(\"" + g_->Pick(kWords) + "\");");
        w_->Close();
        break;
      case 4:
        w_->Open("for (" + loop_ + " = 0; " + loop_ + " < " + std::to_string(g_->Int(2, 5)) +
                 "; " + loop_ + "++)");
        w_->Line(c + " = " + c + " + " + loop_ + ";");
        w_->Close();
        break;
      case 5:
        w_->Line(c + " = " + helper_ + "(" + c + ");");
        break;
      default:
        w_->Open("while (" + c + " < " + std::to_string(g_->Int(1, 4)) + ")");
        w_->Line(c + " = " + c + " + 1;");
        w_->Close();
        break;
    }
  }

  Gen* g_;
  SourceWriter* w_;
  std::string counter_, loop_, helper_;
};

struct Built {
  std::string source;
  std::set<int> anchors;
};

// Element type of a buffer and the API family that writes it.
struct ElemKind {
  std::string type;     // "char", "wchar_t", "int"
  std::int64_t size;    // bytes per element
};

std::string Flaw(FeatureId f) {
  switch (f) {
    case FeatureId::kIBS:
      return "FLAW: the copy size is computed for a larger buffer";
    case FeatureId::kBSB:
      return "FLAW: the copy is sized by the source buffer";
    case FeatureId::kOE:
      return "FLAW: copies one byte past the end";
    case FeatureId::kBO:
      return "FLAW: reads past the end of the source";
    case FeatureId::kDF:
      return "FLAW: the buffer was already freed";
    case FeatureId::kUAF:
      return "FLAW: uses the buffer after it was freed";
    case FeatureId::kBUW:
      return "FLAW: negative index is not checked before the write";
    case FeatureId::kBUR:
      return "FLAW: negative index is not checked before the read";
    case FeatureId::kRA:
      return "FLAW: reads untrusted input into the buffer";
    case FeatureId::kWA:
      return "FLAW: writes through an unchecked buffer";
  }
  return "FLAW";
}

class SampleBuilder {
 public:
  SampleBuilder(Gen* g, FeatureId f, bool bad, std::string fn_name)
      : g_(g), feature_(f), bad_(bad), fn_name_(std::move(fn_name)) {
    style_.allman = g_->Chance(60);
    style_.indent = g_->Pick(std::vector<std::string>{"    ", "    ", "  ", "\t"});
    counter_ = g_->Name(kCounterNames);
    loop_ = g_->Name(kLoopNames);
    helper_ = g_->Name(kHelperNames);
  }

  Built Build() {
    SourceWriter w(style_);
    w.Line("#include <stdio.h>");
    w.Line("#include <stdlib.h>");
    w.Line("#include <string.h>");
    w.Line("#include <wchar.h>");
    w.Blank();
    if (g_->Chance(50)) {
      w.Comment("Test case for " + std::string(detect::FeatureCwe(feature_)) + " (" +
                (bad_ ? "bad" : "good") + " variant)");
    }
    // Helper used by the filler.
    w.Open("static int " + helper_ + "(int value)");
    w.Line("return value * " + std::to_string(g_->Int(2, 4)) + " + 1;");
    w.Close();
    w.Blank();

    std::string params = Params();
    w.Open("void " + fn_name_ + "(" + params + ")");
    w.Line("int " + counter_ + " = " + std::to_string(g_->Int(0, 3)) + ";");
    w.Line("int " + loop_ + ";");
    Filler filler(g_, &w, counter_, loop_, helper_);
    filler.Emit(2);
    Body(&w, &filler);
    filler.Emit(2);
    w.Line("printIntLine(" + counter_ + ");");
    w.Close();
    if (g_->Chance(40)) {
      w.Blank();
      w.Open("int main(void)");
      w.Line(fn_name_ + "(" + Args() + ");");
      w.Line("return 0;");
      w.Close();
    }
    return {w.str(), anchors_};
  }

 private:
  std::string Params() {
    switch (feature_) {
      case FeatureId::kIBS:
      case FeatureId::kOE:
        src_ = g_->Name(kSourceNames);
        elem_ = g_->Pick(std::vector<ElemKind>{{"char", 1}, {"char", 1}, {"wchar_t", 4}, {"int", 4}});
        if (feature_ == FeatureId::kOE && elem_.type == "wchar_t") elem_ = {"char", 1};
        return (elem_.type == "wchar_t" ? "wchar_t *" : elem_.type == "int" ? "int *" : "char *") +
               src_;
      case FeatureId::kBUW:
      case FeatureId::kBUR:
        idx_ = g_->Name(kIndexNames);
        return "int " + idx_;
      case FeatureId::kWA:
        src_ = g_->Name(kSourceNames);
        return "char *" + src_;
      default:
        return "void";
    }
  }

  std::string Args() {
    switch (feature_) {
      case FeatureId::kIBS:
      case FeatureId::kOE:
      case FeatureId::kWA:
        return "NULL";
      case FeatureId::kBUW:
      case FeatureId::kBUR:
        return std::to_string(g_->Int(-5, 12));
      default:
        return "";
    }
  }

  // The statement carrying the feature: FLAW/FIX comment plus the line.
  int Anchor(SourceWriter* w, const std::string& stmt) {
    w->Comment(bad_ ? Flaw(feature_) : "FIX: " + FixText());
    int line = w->Line(stmt);
    if (bad_) anchors_.insert(line);
    return line;
  }

  std::string FixText() {
    switch (feature_) {
      case FeatureId::kDF:
      case FeatureId::kUAF:
        return "the buffer is released exactly once, after its last use";
      case FeatureId::kBUW:
      case FeatureId::kBUR:
        return "both bounds of the index are checked";
      case FeatureId::kRA:
      case FeatureId::kWA:
        return "the buffer size is respected";
      default:
        return "the copy fits in both buffers";
    }
  }

  std::string Wide(const std::string& narrow, const std::string& wide) const {
    return elem_.type == "wchar_t" ? wide : narrow;
  }

  // Count expression for `bytes` bytes given the buffer element.
  std::string Count(std::int64_t elems) {
    if (elem_.type == "int") {
      return g_->Chance(50) ? std::to_string(elems) + " * sizeof(int)"
                            : std::to_string(elems * 4);
    }
    return std::to_string(elems);
  }

  std::string Decl(const std::string& name, std::int64_t elems, bool heap) {
    if (heap) {
      std::string t = elem_.type;
      std::string size = elem_.size == 1 ? std::to_string(elems)
                                         : std::to_string(elems) + " * sizeof(" + t + ")";
      return t + " *" + name + " = (" + t + " *)malloc(" + size + ");";
    }
    return elem_.type + " " + name + "[" + std::to_string(elems) + "];";
  }

  void Body(SourceWriter* w, Filler* filler) {
    switch (feature_) {
      case FeatureId::kIBS:
        return Ibs(w, filler);
      case FeatureId::kBSB:
        return Bsb(w, filler);
      case FeatureId::kOE:
        return Oe(w, filler);
      case FeatureId::kBO:
        return Bo(w, filler);
      case FeatureId::kDF:
        return Df(w, filler);
      case FeatureId::kUAF:
        return Uaf(w, filler);
      case FeatureId::kBUW:
      case FeatureId::kBUR:
        return Under(w, filler);
      case FeatureId::kRA:
        return Ra(w, filler);
      case FeatureId::kWA:
        return Wa(w, filler);
    }
  }

  void Ibs(SourceWriter* w, Filler* filler) {
    std::string d = g_->Name(kBufferNames);
    int len = g_->Pick(std::vector<int>{8, 10, 16, 20, 32, 50});
    bool heap = elem_.type != "wchar_t" && g_->Chance(30);
    // The canonical sizeof mistake for char buffers.
    bool sizeof_int = elem_.type == "char" && !heap && g_->Chance(30);
    int n = bad_ ? len + g_->Int(2, 20) : len - g_->Int(0, std::min(len - 1, 4));
    w->Line(Decl(d, len, heap));
    filler->Emit(2);
    std::string count = Count(n);
    if (sizeof_int) count = bad_ ? std::to_string(len) + " * sizeof(int)" : std::to_string(len);
    std::string call;
    if (elem_.type == "wchar_t") {
      call = g_->Chance(50) ? "wcsncpy(" + d + ", " + src_ + ", " + count + ");"
                            : "wmemset(" + d + ", L'A', " + count + ");";
    } else if (elem_.type == "int") {
      call = "memcpy(" + d + ", " + src_ + ", " + count + ");";
    } else {
      switch (g_->Int(0, 3)) {
        case 0:
          call = "memcpy(" + d + ", " + src_ + ", " + count + ");";
          break;
        case 1:
          call = "strncpy(" + d + ", " + src_ + ", " + count + ");";
          break;
        case 2:
          call = "memmove(" + d + ", " + src_ + ", " + count + ");";
          break;
        default:
          call = "memset(" + d + ", 'C', " + count + ");";
          break;
      }
    }
    Anchor(w, call);
    if (heap) w->Line("free(" + d + ");");
  }

  void Bsb(SourceWriter* w, Filler* filler) {
    elem_ = g_->Pick(std::vector<ElemKind>{{"char", 1}, {"char", 1}, {"wchar_t", 4}, {"int", 4}});
    std::string d = g_->Name(kBufferNames);
    std::string s = g_->Name(kSourceNames);
    int len = g_->Pick(std::vector<int>{10, 16, 20, 25});
    int slen = bad_ ? len + g_->Int(2, 30) : len - g_->Int(0, 5);
    w->Line(Decl(d, len, false));
    w->Line(Decl(s, slen, elem_.type == "char" && g_->Chance(30)));
    if (elem_.type == "wchar_t") {
      w->Line("wmemset(" + s + ", L'B', " + std::to_string(slen - 1) + ");");
    } else if (elem_.type == "char") {
      w->Line("memset(" + s + ", 'B', " + std::to_string(slen - 1) + ");");
    }
    filler->Emit(2);
    std::string call;
    if (elem_.type == "wchar_t") {
      call = "wcsncpy(" + d + ", " + s + ", " + std::to_string(slen) + ");";
    } else if (elem_.type == "int") {
      call = "memcpy(" + d + ", " + s + ", " + Count(slen) + ");";
    } else {
      call = (g_->Chance(50) ? "memcpy(" : "strncpy(") + d + ", " + s + ", " +
             std::to_string(slen) + ");";
    }
    Anchor(w, call);
  }

  void Oe(SourceWriter* w, Filler* filler) {
    std::string d = g_->Name(kBufferNames);
    int len = g_->Pick(std::vector<int>{7, 8, 10, 16, 20});
    bool heap = g_->Chance(30);
    w->Line(Decl(d, len, heap));
    filler->Emit(2);
    std::int64_t bytes = len * elem_.size;
    std::string count;
    if (elem_.type == "int") {
      count = bad_ ? std::to_string(len) + " * sizeof(int) + 1" : Count(len);
    } else {
      count = bad_ ? (g_->Chance(50) ? std::to_string(len) + " + 1" : std::to_string(bytes + 1))
                   : std::to_string(bytes);
    }
    std::string api = elem_.type == "int" ? "memcpy" : g_->Chance(50) ? "strncpy" : "memcpy";
    Anchor(w, api + "(" + d + ", " + src_ + ", " + count + ");");
    if (heap) w->Line("free(" + d + ");");
  }

  void Bo(SourceWriter* w, Filler* filler) {
    elem_ = {"char", 1};
    std::string d = g_->Name(kBufferNames);
    std::string s = g_->Name(kSourceNames);
    int slen = g_->Pick(std::vector<int>{8, 10, 16, 20});
    int n = bad_ ? slen + g_->Int(1, 20) : slen - g_->Int(0, 4);
    int dlen = 2 * (slen + 21) + g_->Int(0, 10);
    w->Line(Decl(d, dlen, false));
    bool heap = g_->Chance(30);
    w->Line(Decl(s, slen, heap));
    w->Line("memset(" + s + ", 'A', " + std::to_string(slen - 1) + ");");
    filler->Emit(2);
    Anchor(w, (g_->Chance(50) ? "memcpy(" : "memmove(") + d + ", " + s + ", " +
                  std::to_string(n) + ");");
    if (heap) w->Line("free(" + s + ");");
  }

  std::string HeapBuffer(SourceWriter* w, std::string* type) {
    std::string d = g_->Name(kBufferNames);
    *type = g_->Chance(60) ? "char" : "int";
    std::string size = *type == "char" ? std::to_string(g_->Pick(std::vector<int>{50, 100})) +
                                             " * sizeof(char)"
                                       : std::to_string(g_->Pick(std::vector<int>{10, 20})) +
                                             " * sizeof(int)";
    std::string alloc = "(" + *type + " *)malloc(" + size + ")";
    if (g_->Chance(50)) {
      w->Line(*type + " *" + d + ";");
      w->Line(d + " = NULL;");
      w->Line(d + " = " + alloc + ";");
    } else {
      w->Line(*type + " *" + d + " = " + alloc + ";");
    }
    w->Open("if (" + d + " == NULL)");
    w->Line("exit(-1);");
    w->Close();
    return d;
  }

  void Df(SourceWriter* w, Filler* filler) {
    std::string type;
    std::string d = HeapBuffer(w, &type);
    w->Line(d + "[0] = " + (type == "char" ? "'A'" : "5") + ";");
    filler->Emit(1);
    if (!bad_) {
      Anchor(w, "free(" + d + ");");
      return;
    }
    if (g_->Chance(40)) {
      w->Open("if (" + counter_ + " >= 0)");
      w->Line("free(" + d + ");");
      w->Close();
    } else {
      w->Line("free(" + d + ");");
    }
    filler->Emit(2);
    Anchor(w, "free(" + d + ");");
  }

  void Uaf(SourceWriter* w, Filler* filler) {
    std::string type;
    std::string d = HeapBuffer(w, &type);
    std::string use;
    if (type == "char") {
      use = g_->Pick(std::vector<std::string>{"printLine(" + d + ");", d + "[0] = 'B';",
                                              "printIntLine(" + d + "[1]);"});
      w->Line("memset(" + d + ", 'A', 49);");
      w->Line(d + "[49] = '\\0';");
    } else {
      use = g_->Pick(std::vector<std::string>{"printIntLine(" + d + "[0]);", d + "[2] = 7;"});
      w->Line(d + "[0] = 1;");
    }
    filler->Emit(1);
    if (bad_) {
      w->Line("free(" + d + ");");
      filler->Emit(2);
      Anchor(w, use);
    } else {
      Anchor(w, use);
      filler->Emit(1);
      w->Line("free(" + d + ");");
    }
  }

  void Under(SourceWriter* w, Filler* filler) {
    bool write = feature_ == FeatureId::kBUW;
    std::string b = g_->Name(kBufferNames);
    int len = g_->Pick(std::vector<int>{10, 16, 20});
    std::string type = g_->Chance(60) ? "int" : "char";
    std::string zero = type == "int" ? "0" : "'0'";
    w->Line(type + " " + b + "[" + std::to_string(len) + "] = { " + zero + " };");
    std::string x = counter_;
    if (g_->Chance(50)) {
      w->Line(idx_ + " = " + idx_ + " - " + std::to_string(g_->Int(1, 5)) + ";");
    }
    filler->Emit(2);
    std::string access = write ? b + "[" + idx_ + "] = " + (type == "int" ? "1" : "'A'") + ";"
                               : (g_->Chance(50) ? "printIntLine(" + b + "[" + idx_ + "]);"
                                                 : x + " = " + b + "[" + idx_ + "];");
    std::string upper = idx_ + " < " + std::to_string(len);
    bool guarded = !bad_ || g_->Chance(70);
    if (guarded) {
      std::string cond = bad_ ? upper : idx_ + " >= 0 && " + upper;
      if (!bad_ && g_->Chance(30)) cond = upper + " && " + idx_ + " > -1";
      w->Open("if (" + cond + ")");
      Anchor(w, access);
      w->Close();
      if (g_->Chance(30)) {
        w->Open("else");
        w->Line("printLine(\"index out of range\");");
        w->Close();
      }
    } else {
      Anchor(w, access);
    }
  }

  void Ra(SourceWriter* w, Filler* filler) {
    std::string d = g_->Name(kBufferNames);
    int len = g_->Pick(std::vector<int>{32, 64, 100});
    w->Line("char " + d + "[" + std::to_string(len) + "] = \"\";");
    filler->Emit(2);
    if (g_->Chance(60)) {
      Anchor(w, "fgets(" + d + ", " + std::to_string(len) + ", stdin);");
    } else {
      std::string c = g_->Name(kSourceNames);
      w->Line("int " + c + ";");
      Anchor(w, c + " = getchar();");
      w->Line(d + "[0] = (char)" + c + ";");
    }
    w->Line("printLine(" + d + ");");
  }

  void Wa(SourceWriter* w, Filler* filler) {
    std::string d = g_->Name(kBufferNames);
    int len = g_->Pick(std::vector<int>{32, 64, 100});
    w->Line("char " + d + "[" + std::to_string(len) + "];");
    filler->Emit(2);
    int n = 4 * g_->Int(1, len / 4);
    switch (g_->Int(0, 2)) {
      case 0:
        Anchor(w, "memset(" + d + ", 'A', " + std::to_string(n) + ");");
        break;
      case 1:
        Anchor(w, "memcpy(" + d + ", " + src_ + ", " + std::to_string(n) + ");");
        break;
      default:
        Anchor(w, "strncpy(" + d + ", " + src_ + ", " + std::to_string(n) + ");");
        break;
    }
    w->Line(d + "[" + std::to_string(len - 1) + "] = '\\0';");
  }

  Gen* g_;
  FeatureId feature_;
  bool bad_;
  std::string fn_name_;
  Style style_;
  std::string counter_, loop_, helper_;
  std::string src_, idx_;
  ElemKind elem_{"char", 1};
  std::set<int> anchors_;
};

}  // namespace

CodeSample GenerateSample(std::uint64_t seed, int index) {
  FeatureId f = detect::kAllFeatures[static_cast<std::size_t>(index) % detect::kAllFeatures.size()];
  bool bad = (index / 10) % 2 == 0;
  std::string cwe(detect::FeatureCwe(f));
  std::ostringstream id;
  id << cwe << "_" << detect::FeatureName(f) << "_" << std::setw(4) << std::setfill('0') << index
     << (bad ? "_bad" : "_good");
  Gen g(seed, index);
  SampleBuilder builder(&g, f, bad, id.str());
  Built built = builder.Build();

  CodeSample s;
  s.sample_id = id.str();
  s.path = "src/" + s.sample_id + ".c";
  s.label = bad ? frontend::Label::kVulnerable : frontend::Label::kNonVulnerable;
  s.cwe = cwe;
  s.vulnerable_lines = built.anchors;
  s.source = std::move(built.source);
  if (bad) s.features = {std::string(detect::FeatureName(f))};
  return s;
}

std::vector<CodeSample> GenerateCorpus(const CorpusOptions& options) {
  int n = std::max(options.samples, 40);
  std::vector<CodeSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(GenerateSample(options.seed, i));
  return out;
}

void WriteCorpus(const std::filesystem::path& dir, const std::vector<CodeSample>& samples) {
  for (const CodeSample& s : samples) frontend::WriteFile(dir / s.path, s.source);
  frontend::WriteManifest(dir / "manifest.jsonl", samples);
}

}  // namespace viperkit::pipeline
