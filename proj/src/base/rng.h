// base/rng.h
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
// Deterministic random number generation.  Distributions are hand-rolled on
// top of std::mt19937_64 so that streams are bit-identical across compilers
// and platforms.

#ifndef GEOASR_BASE_RNG_H_
#define GEOASR_BASE_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "base/error.h"

namespace geoasr {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1).
  double NextDouble() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  uint64_t NextIndex(uint64_t n) {
    GEOASR_CHECK(n > 0) << "NextIndex needs a positive bound";
    // Modulo bias is irrelevant for the corpus sizes used here.
    return engine_() % n;
  }

  double NextGaussian() {
    // Box-Muller; one value per call keeps the stream layout simple.
    double u1 = NextDouble();
    double u2 = NextDouble();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * M_PI * u2);
  }

  double NextGumbel() {
    double u = NextDouble();
    if (u < 1e-300) u = 1e-300;
    return -std::log(-std::log(u));
  }

  // Index drawn proportionally to the given nonnegative weights.
  size_t NextWeighted(const std::vector<double> &weights) {
    double total = 0;
    for (double w : weights) total += w;
    GEOASR_CHECK(total > 0) << "NextWeighted needs positive total weight";
    double r = NextDouble() * total;
    double acc = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (r < acc) return i;
    }
    return weights.size() - 1;
  }

  // Derives an independent stream, e.g. one per utterance, so that work can
  // be parallelized without changing results.
  static Rng ForItem(uint64_t seed, uint64_t item) {
    // SplitMix64 of the pair, then used as an engine seed.
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (item + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace geoasr

#endif  // GEOASR_BASE_RNG_H_
