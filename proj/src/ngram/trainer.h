// ngram/trainer.h
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
// Modified interpolated Kneser-Ney estimation with per-order count cutoffs.

#ifndef GEOASR_NGRAM_TRAINER_H_
#define GEOASR_NGRAM_TRAINER_H_

#include <string>
#include <vector>

#include "ngram/model.h"

namespace geoasr {
namespace ngram {

struct WeightedSentence {
  std::vector<std::string> tokens;
  int64_t count = 1;
};

// Trains an order-n model on tokenized sentences.
//
// Count semantics: an n-gram whose raw training count is at or below its
// order's cutoff is pruned before estimation (prefixes of surviving longer
// n-grams are always retained).  The order-1 cutoff instead truncates the
// vocabulary: words at or below it are replaced by <unk> before counting.
//
// Smoothing: modified Kneser-Ney with three discounts per order estimated
// from counts-of-counts, interpolated with the lower order, then converted
// to backoff form.  Lower-order n-grams use distinct-predecessor counts
// except those starting with <s>, which keep raw counts.
NGramModel Train(const std::vector<WeightedSentence> &corpus, int order,
                 const std::vector<int> &cutoffs);

// Convenience overload, every sentence with count 1.
NGramModel Train(const std::vector<std::vector<std::string>> &corpus,
                 int order, const std::vector<int> &cutoffs);

// Three per-order discounts for counts of 1, 2, and >= 3.
struct Discounts {
  double d1 = 0.5;
  double d2 = 1.0;
  double d3 = 1.5;

  double For(int64_t count) const {
    if (count <= 0) return 0.0;
    if (count == 1) return d1;
    if (count == 2) return d2;
    return d3;
  }
};

// Estimates discounts from counts-of-counts n1..n4:
//   Y  = n1 / (n1 + 2 n2)
//   D1 = 1 - 2 Y n2 / n1, D2 = 2 - 3 Y n3 / n2, D3 = 3 - 4 Y n4 / n3,
// falling back to the defaults above when a statistic is empty and clamping
// each discount into [0, class value].
Discounts EstimateDiscounts(int64_t n1, int64_t n2, int64_t n3, int64_t n4);

}  // namespace ngram
}  // namespace geoasr

#endif  // GEOASR_NGRAM_TRAINER_H_
