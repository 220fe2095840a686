// amsim/confusion.cc
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

#include "amsim/confusion.h"

#include <cmath>

#include "base/error.h"
#include "base/rng.h"

namespace geoasr {
namespace amsim {

AccentLevel AccentLevelFromName(const std::string &name) {
  if (name == "none") return AccentLevel::kNone;
  if (name == "slight") return AccentLevel::kSlight;
  if (name == "medium") return AccentLevel::kMedium;
  if (name == "serious") return AccentLevel::kSerious;
  GEOASR_ERROR() << "unknown accent level: " << name;
}

const char *AccentLevelName(AccentLevel level) {
  switch (level) {
    case AccentLevel::kNone:
      return "none";
    case AccentLevel::kSlight:
      return "slight";
    case AccentLevel::kMedium:
      return "medium";
    case AccentLevel::kSerious:
      return "serious";
  }
  GEOASR_ERROR() << "bad accent level value";
}

double AccentOffDiagonalMass(AccentLevel level) {
  switch (level) {
    case AccentLevel::kNone:
      return 0.0;
    case AccentLevel::kSlight:
      return 0.06;
    case AccentLevel::kMedium:
      return 0.14;
    case AccentLevel::kSerious:
      return 0.30;
  }
  GEOASR_ERROR() << "bad accent level value";
}

void ConfusionModel::Validate() const {
  for (size_t u = 1; u < rows.size(); ++u) {
    double mass = 0.0;
    for (size_t v = 1; v < rows[u].size(); ++v) mass += rows[u][v];
    GEOASR_CHECK(std::abs(mass - 1.0) <= 1e-6)
        << "confusion row " << u << " sums to " << mass;
  }
  if (level == AccentLevel::kNone) {
    for (size_t u = 1; u < rows.size(); ++u) {
      GEOASR_CHECK(rows[u][u] == 1.0)
          << "accent level none must be the identity";
    }
  }
}

ConfusionModel BuildConfusionModel(const wfst::SymbolTablePtr &unit_syms,
                                   int region, AccentLevel level) {
  size_t n = unit_syms->Size();
  GEOASR_CHECK(n >= 3) << "unit inventory too small for confusion modeling";
  ConfusionModel model;
  model.level = level;
  model.region = region;
  model.rows.assign(n, std::vector<double>(n, 0.0));
  double eps = AccentOffDiagonalMass(level);
  constexpr int kPartners = 3;
  for (size_t u = 1; u < n; ++u) {
    // Partner choice depends on region and unit only, not on the level, so
    // levels of the same region confuse the same pairs at growing strength.
    Rng rng = Rng::ForItem(0x9e0u + static_cast<uint64_t>(region), u);
    model.rows[u][u] = 1.0 - eps;
    for (int k = 0; k < kPartners; ++k) {
      size_t v;
      do {
        v = 1 + rng.NextIndex(n - 1);
      } while (v == u);
      model.rows[u][v] += eps / kPartners;
    }
  }
  model.Validate();
  return model;
}

}  // namespace amsim
}  // namespace geoasr
