// wfst/weight.h
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
// Additive-cost / min-path (tropical) semiring over negative-log costs.

#ifndef GEOASR_WFST_WEIGHT_H_
#define GEOASR_WFST_WEIGHT_H_

#include <limits>

namespace geoasr {
namespace wfst {

inline constexpr double kInfiniteCost =
    std::numeric_limits<double>::infinity();

struct Weight {
  double cost = kInfiniteCost;

  static Weight Zero() { return {kInfiniteCost}; }  // annihilator
  static Weight One() { return {0.0}; }             // identity

  bool IsZero() const { return cost == kInfiniteCost; }

  friend bool operator==(const Weight &a, const Weight &b) {
    return a.cost == b.cost;
  }
};

inline Weight Plus(const Weight &a, const Weight &b) {
  return {a.cost < b.cost ? a.cost : b.cost};
}

inline Weight Times(const Weight &a, const Weight &b) {
  if (a.IsZero() || b.IsZero()) return Weight::Zero();
  return {a.cost + b.cost};
}

}  // namespace wfst
}  // namespace geoasr

#endif  // GEOASR_WFST_WEIGHT_H_
