// amsim/emission_synth.cc
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

#include "amsim/emission_synth.h"

#include <cmath>

#include "base/error.h"
#include "base/rng.h"

namespace geoasr {
namespace amsim {

decoder::EmissionSequence SynthesizeEmissions(
    const std::vector<int> &units, const ConfusionModel &confusion,
    const wfst::SymbolTablePtr &unit_syms, double temperature, uint64_t seed,
    uint64_t utterance_index, double posterior_floor) {
  GEOASR_CHECK(temperature > 0) << "temperature must be positive";
  GEOASR_CHECK(posterior_floor >= 0 && posterior_floor < 1)
      << "posterior floor must be in [0,1)";
  size_t n = unit_syms->Size();
  GEOASR_CHECK(confusion.rows.size() == n)
      << "confusion model does not match the unit inventory";
  Rng rng = Rng::ForItem(seed, utterance_index);
  decoder::EmissionSequence out;
  out.unit_syms = unit_syms;
  for (int unit : units) {
    GEOASR_CHECK(unit >= 1 && unit < static_cast<int>(n))
        << "unknown unit id " << unit;
    const std::vector<double> &row = confusion.rows[unit];
    std::vector<double> posterior(n, 0.0);
    double total = 0.0;
    double uniform = posterior_floor / static_cast<double>(n - 1);
    for (size_t v = 1; v < n; ++v) {
      double g = rng.NextGumbel();
      posterior[v] =
          ((1.0 - posterior_floor) * row[v] + uniform) *
          std::exp(temperature * g);
      total += posterior[v];
    }
    std::vector<double> frame(n, -wfst::kInfiniteCost);
    for (size_t v = 1; v < n; ++v) {
      frame[v] = posterior[v] > 0 ? std::log(posterior[v] / total)
                                  : -wfst::kInfiniteCost;
    }
    out.frames.push_back(std::move(frame));
  }
  return out;
}

decoder::EmissionSequence SynthesizeEmissions(
    const std::vector<std::string> &units, const ConfusionModel &confusion,
    const wfst::SymbolTablePtr &unit_syms, double temperature, uint64_t seed,
    uint64_t utterance_index, double posterior_floor) {
  std::vector<int> ids;
  ids.reserve(units.size());
  for (const auto &u : units) {
    int id = unit_syms->Find(u);
    GEOASR_CHECK(id > 0) << "unknown unit " << u;
    ids.push_back(id);
  }
  return SynthesizeEmissions(ids, confusion, unit_syms, temperature, seed,
                             utterance_index, posterior_floor);
}

}  // namespace amsim
}  // namespace geoasr
