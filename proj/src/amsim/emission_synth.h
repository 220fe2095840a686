// amsim/emission_synth.h
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
// One frame per unit: the frame posterior is the true unit's confusion row,
// floored by a small uniform mass (soft posteriors are never exactly zero),
// jittered multiplicatively by the noise temperature and renormalized.
// Deterministic in (seed, utterance index).

#ifndef GEOASR_AMSIM_EMISSION_SYNTH_H_
#define GEOASR_AMSIM_EMISSION_SYNTH_H_

#include <string>
#include <vector>

#include "amsim/confusion.h"
#include "decoder/emission.h"

namespace geoasr {
namespace amsim {

// `units` are unit symbol ids (1-based); temperature > 0.
decoder::EmissionSequence SynthesizeEmissions(
    const std::vector<int> &units, const ConfusionModel &confusion,
    const wfst::SymbolTablePtr &unit_syms, double temperature, uint64_t seed,
    uint64_t utterance_index, double posterior_floor = 1e-4);

// Convenience: unit strings.
decoder::EmissionSequence SynthesizeEmissions(
    const std::vector<std::string> &units, const ConfusionModel &confusion,
    const wfst::SymbolTablePtr &unit_syms, double temperature, uint64_t seed,
    uint64_t utterance_index, double posterior_floor = 1e-4);

}  // namespace amsim
}  // namespace geoasr

#endif  // GEOASR_AMSIM_EMISSION_SYNTH_H_
