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

#ifndef VIPERKIT_DETECT_DETECTOR_H_
#define VIPERKIT_DETECT_DETECTOR_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "viperkit/cpg/graph.h"
#include "viperkit/detect/witness.h"

namespace viperkit::detect {

// IBS, BSB, OE and BO over WF/CF nodes whose buffers resolve through DD edges to
// AD/AF nodes. Precedence on one (call, destination) pair is OE > BSB > IBS;
// BO is judged separately on the source buffer. UNKNOWN constants abstain.
std::vector<FeatureWitness> DetectOverflow(const cpg::PropertyGraph& g);

// DF and UAF. A path from free(b) stops at any redefinition of b and at
// the next free(b), so each witness pairs a free with its nearest follower.
std::vector<FeatureWitness> DetectDeallocatedUse(const cpg::PropertyGraph& g);

// BUW and BUR for b[idx] with idx a signed variable. Guards are taken
// from the transitive CD ancestors reached on their true branch.
std::vector<FeatureWitness> DetectRangeCheck(const cpg::PropertyGraph& g);

// RA and WA. `overflow` lists the overflow witnesses of the same graph;
// a WA witness on a call they already cover is dropped.
std::vector<FeatureWitness> DetectSensitiveApi(const cpg::PropertyGraph& g,
                                               const std::set<int>& vulnerable_lines,
                                               const std::vector<FeatureWitness>& overflow);

// All rules on one graph, sorted. Without vulnerable lines RA and WA are
// skipped.
std::vector<FeatureWitness> DetectGraph(const cpg::PropertyGraph& g,
                                        const std::optional<std::set<int>>& vulnerable_lines);

struct DetectionOutcome {
  std::vector<FeatureWitness> witnesses;
  // Parse or graph-construction failure; witnesses is empty when set.
  std::optional<std::string> error;
};

// Parses `source`, builds every function's graph and runs all rules. Each
// witness gets `sample_id`.
DetectionOutcome DetectSource(const std::string& sample_id, const std::string& source,
                              const std::optional<std::set<int>>& vulnerable_lines,
                              const cpg::SizeofModel& sizes = cpg::SizeofModel());

}  // namespace viperkit::detect

#endif  // VIPERKIT_DETECT_DETECTOR_H_
