// amsim/confusion.h
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
// Region-dependent unit confusion for the synthetic acoustic frontend.
// Accent levels scale the off-diagonal mass; "none" is the identity.

#ifndef GEOASR_AMSIM_CONFUSION_H_
#define GEOASR_AMSIM_CONFUSION_H_

#include <string>
#include <vector>

#include "wfst/fst.h"

namespace geoasr {
namespace amsim {

enum class AccentLevel { kNone = 0, kSlight = 1, kMedium = 2, kSerious = 3 };

AccentLevel AccentLevelFromName(const std::string &name);
const char *AccentLevelName(AccentLevel level);

// Fraction of probability moved off the diagonal at each level.
double AccentOffDiagonalMass(AccentLevel level);

struct ConfusionModel {
  // rows[u][v] = P(observed unit v | true unit u); row-stochastic, unit ids
  // 1..U with slot 0 unused.
  std::vector<std::vector<double>> rows;
  AccentLevel level = AccentLevel::kNone;
  int region = 0;

  void Validate() const;
};

// Deterministic in (region, level, unit inventory): each unit confuses into
// three region-dependent partners.
ConfusionModel BuildConfusionModel(const wfst::SymbolTablePtr &unit_syms,
                                   int region, AccentLevel level);

}  // namespace amsim
}  // namespace geoasr

#endif  // GEOASR_AMSIM_CONFUSION_H_
