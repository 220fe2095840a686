// decoder/emission.h
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
//
// Copyright 2026 The geoasr Authors.
//
// Per-frame acoustic unit log-posteriors, one frame per unit.

#ifndef GEOASR_DECODER_EMISSION_H_
#define GEOASR_DECODER_EMISSION_H_

#include <string>
#include <vector>

#include "wfst/fst.h"

namespace geoasr {
namespace decoder {

struct EmissionSequence {
  // frames[t][unit_id] = natural-log posterior; slot 0 (<eps>) unused and
  // kept at -inf.
  std::vector<std::vector<double>> frames;
  wfst::SymbolTablePtr unit_syms;

  size_t NumFrames() const { return frames.size(); }
  size_t NumUnits() const {
    return unit_syms ? unit_syms->Size() - 1 : 0;
  }

  // Every frame must exponentiate to a distribution (1 +- 1e-6).
  void Validate() const;
};

// Text format: `frames<TAB>F<TAB>units<TAB>U` header, then F rows of U
// log-posteriors for unit ids 1..U.
std::string EmissionToText(const EmissionSequence &emissions);
EmissionSequence EmissionFromText(const std::string &text,
                                  wfst::SymbolTablePtr unit_syms);

void WriteEmissionFile(const EmissionSequence &emissions,
                       const std::string &path);
EmissionSequence ReadEmissionFile(const std::string &path,
                                  wfst::SymbolTablePtr unit_syms);

}  // namespace decoder
}  // namespace geoasr

#endif  // GEOASR_DECODER_EMISSION_H_
