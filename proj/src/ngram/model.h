// ngram/model.h
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
// Backoff n-gram language model with log10 probabilities and backoff
// weights, queried by standard longest-match backoff evaluation.

#ifndef GEOASR_NGRAM_MODEL_H_
#define GEOASR_NGRAM_MODEL_H_

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ngram/counts.h"
#include "ngram/vocabulary.h"

namespace geoasr {
namespace ngram {

// Log10 probability written for <s>, which is never predicted.
inline constexpr double kNeverPredictedLog10 = -99.0;

struct NGramEntry {
  double log10_prob = 0.0;
  // log10 backoff weight; meaningful only for entries below the top order.
  double log10_bow = 0.0;
};

class NGramModel {
 public:
  NGramModel(int order, Vocabulary vocab, std::vector<int> cutoffs);

  int Order() const { return order_; }
  const Vocabulary &Vocab() const { return vocab_; }
  const std::vector<int> &Cutoffs() const { return cutoffs_; }

  // Entry manipulation (used by the trainer and the ARPA reader).
  void SetEntry(std::span<const TokenId> tokens, double log10_prob,
                double log10_bow = 0.0);
  const NGramEntry *FindEntry(std::span<const TokenId> tokens) const;
  size_t NumEntries(int k) const;
  size_t TotalEntries() const;

  // All n-grams of order k, sorted by token ids (deterministic).
  std::vector<std::vector<TokenId>> SortedNGrams(int k) const;

  // Log10 conditional probability with longest-match backoff.  The history
  // is truncated to the final order-1 tokens; tokens outside the vocabulary
  // must already be mapped to kUnk by the caller.
  double LogProbIds(std::span<const TokenId> history, TokenId word) const;

  // String-level convenience wrapper; unknown tokens map to <unk>.
  double LogProb(std::span<const std::string> history,
                 const std::string &word) const;

  // Natural-log domain probability, exp(ln 10 * log10 prob).
  double Prob(std::span<const TokenId> history, TokenId word) const;

 private:
  int order_;
  Vocabulary vocab_;
  std::vector<int> cutoffs_;
  // tables_[k-1]: order-k entries keyed by packed token ids.
  std::vector<std::unordered_map<NGramKey, NGramEntry>> tables_;
};

// Order-2 model holding exactly the unigrams and bigrams of the input, with
// backoff weights recomputed so each retained context normalizes.
NGramModel MakeBigramSubset(const NGramModel &model);

// Recomputes the backoff weights of all order-k entries from the stored
// probabilities at orders k and k+1:
//   bow(h) = (1 - sum_stored P(w|h)) / (1 - sum_stored P(w|backoff(h))).
void RecomputeBackoffWeights(NGramModel *model, int context_order);

}  // namespace ngram
}  // namespace geoasr

#endif  // GEOASR_NGRAM_MODEL_H_
