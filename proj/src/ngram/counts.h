// ngram/counts.h
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
// Raw and continuation n-gram counts feeding Kneser-Ney estimation.

#ifndef GEOASR_NGRAM_COUNTS_H_
#define GEOASR_NGRAM_COUNTS_H_

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "base/error.h"
#include "ngram/vocabulary.h"

namespace geoasr {
namespace ngram {

// N-grams are keyed by their packed token ids.
using NGramKey = std::string;

inline NGramKey MakeKey(std::span<const TokenId> tokens) {
  NGramKey key(tokens.size() * sizeof(TokenId), '\0');
  if (!tokens.empty()) {
    std::memcpy(key.data(), tokens.data(), tokens.size() * sizeof(TokenId));
  }
  return key;
}

inline std::vector<TokenId> KeyTokens(const NGramKey &key) {
  std::vector<TokenId> tokens(key.size() / sizeof(TokenId));
  if (!tokens.empty()) std::memcpy(tokens.data(), key.data(), key.size());
  return tokens;
}

inline size_t KeyLength(const NGramKey &key) {
  return key.size() / sizeof(TokenId);
}

// Per-order raw counts plus the distinct-predecessor (continuation) counts
// used by Kneser-Ney at the lower orders.
class CountTable {
 public:
  explicit CountTable(int order) : order_(order), raw_(order) {
    GEOASR_CHECK(order >= 1) << "order must be >= 1, got " << order;
  }

  int Order() const { return order_; }

  // Counts every k-gram, k = 1..order, of the padded sentence
  // <s> w1 .. wn </s>, each with the given multiplicity.
  void AddSentence(std::span<const TokenId> words, int64_t weight = 1) {
    GEOASR_CHECK(weight >= 0) << "negative sentence weight";
    std::vector<TokenId> padded;
    padded.reserve(words.size() + 2);
    padded.push_back(Vocabulary::kBos);
    padded.insert(padded.end(), words.begin(), words.end());
    padded.push_back(Vocabulary::kEos);
    for (size_t i = 0; i < padded.size(); ++i) {
      size_t max_n = std::min<size_t>(order_, padded.size() - i);
      for (size_t n = 1; n <= max_n; ++n) {
        raw_[n - 1][MakeKey({padded.data() + i, n})] += weight;
      }
    }
  }

  int64_t RawCount(std::span<const TokenId> tokens) const {
    GEOASR_CHECK(!tokens.empty() && tokens.size() <= static_cast<size_t>(order_))
        << "bad n-gram length " << tokens.size();
    const auto &table = raw_[tokens.size() - 1];
    auto it = table.find(MakeKey(tokens));
    return it == table.end() ? 0 : it->second;
  }

  const std::unordered_map<NGramKey, int64_t> &Raw(int k) const {
    GEOASR_CHECK(k >= 1 && k <= order_) << "order " << k << " out of range";
    return raw_[k - 1];
  }

  std::unordered_map<NGramKey, int64_t> &MutableRaw(int k) {
    GEOASR_CHECK(k >= 1 && k <= order_) << "order " << k << " out of range";
    return raw_[k - 1];
  }

 private:
  int order_;
  std::vector<std::unordered_map<NGramKey, int64_t>> raw_;
};

}  // namespace ngram
}  // namespace geoasr

#endif  // GEOASR_NGRAM_COUNTS_H_
