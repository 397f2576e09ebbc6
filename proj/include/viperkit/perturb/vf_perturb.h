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

#ifndef VIPERKIT_PERTURB_VF_PERTURB_H_
#define VIPERKIT_PERTURB_VF_PERTURB_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "viperkit/cpg/const_eval.h"
#include "viperkit/detect/annotate.h"
#include "viperkit/perturb/variant.h"

namespace viperkit::perturb {

// A recipe could not find the token it has to rewrite.
class UneditableWitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VfPerturbationResult {
  std::vector<PerturbedVariant> variants;
  // One line per recipe that raised UneditableWitness.
  std::vector<std::string> skipped;
};

// Applies the fixed FPP/FEP recipe set of each witness's feature to
// `source`. FPP labels copy the sample label; FEP labels are provisional
// until SelfCheck re-detects the variant.
//
//   IBS/BSB/BO  FPP1 LEN-1, FPP2 n+1 (BSB grows the source with n),
//               FEP1 LEN<-n, FEP2 n<-LEN
//   OE          FPP1 LEN+1 and n+1, FEP1 n<-LEN, FEP2 LEN<-n
//   DF          FPP1 printf(""); between the frees,
//               FEP1 b = <original allocation>; between the frees,
//               FEP2 second free(b) -> free(NULL)
//   UAF         FPP1 printf(""); before the use, FEP1 free(b) -> free(NULL),
//               FEP2 use statement -> printf("");
//   BUW/BUR     FPP1 conjoin idx > -2*LEN_b, FEP1 conjoin idx >= 0,
//               FEP2 conjoin idx > -1
//   RA          FEP1 callee -> rd_stub
//   WA          FPP1 memcpy<->strncpy or memset<->wmemset, FEP1 callee -> wr_stub
VfPerturbationResult GenerateVfPerturbations(const detect::AnnotatedSample& sample,
                                             const std::string& source,
                                             const cpg::SizeofModel& sizes = cpg::SizeofModel());

}  // namespace viperkit::perturb

#endif  // VIPERKIT_PERTURB_VF_PERTURB_H_
