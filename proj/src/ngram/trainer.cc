// ngram/trainer.cc
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

#include "ngram/trainer.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "ngram/counts.h"

namespace geoasr {
namespace ngram {

namespace {

constexpr double kMinProb = 1e-7;

double Clamp(double v, double lo, double hi) {
  return std::min(hi, std::max(lo, v));
}

}  // namespace

Discounts EstimateDiscounts(int64_t n1, int64_t n2, int64_t n3, int64_t n4) {
  Discounts d;
  if (n1 + 2 * n2 == 0) return d;
  double y = static_cast<double>(n1) / static_cast<double>(n1 + 2 * n2);
  if (n1 > 0) d.d1 = 1.0 - 2.0 * y * n2 / n1;
  if (n2 > 0) d.d2 = 2.0 - 3.0 * y * n3 / n2;
  if (n3 > 0) d.d3 = 3.0 - 4.0 * y * n4 / n3;
  d.d1 = Clamp(d.d1, 0.0, 1.0);
  d.d2 = Clamp(d.d2, 0.0, 2.0);
  d.d3 = Clamp(d.d3, 0.0, 3.0);
  return d;
}

NGramModel Train(const std::vector<std::vector<std::string>> &corpus,
                 int order, const std::vector<int> &cutoffs) {
  std::vector<WeightedSentence> weighted;
  weighted.reserve(corpus.size());
  for (const auto &tokens : corpus) weighted.push_back({tokens, 1});
  return Train(weighted, order, cutoffs);
}

NGramModel Train(const std::vector<WeightedSentence> &corpus, int order,
                 const std::vector<int> &cutoffs) {
  GEOASR_CHECK(order >= 1) << "order must be >= 1, got " << order;
  GEOASR_CHECK(static_cast<int>(cutoffs.size()) == order)
      << "cutoff list length " << cutoffs.size() << " != order " << order;
  GEOASR_CHECK(!corpus.empty()) << "empty training corpus";

  // Vocabulary truncation: words at or below the unigram cutoff become
  // <unk>.  Symbols are added in sorted order so ids are input-order
  // independent.
  std::map<std::string, int64_t> word_counts;
  for (const auto &sentence : corpus) {
    for (const auto &token : sentence.tokens) {
      word_counts[token] += sentence.count;
    }
  }
  Vocabulary vocab;
  for (const auto &[word, count] : word_counts) {
    if (count > cutoffs[0]) vocab.AddSymbol(word);
  }

  CountTable counts(order);
  for (const auto &sentence : corpus) {
    if (sentence.count == 0) continue;
    std::vector<TokenId> ids;
    ids.reserve(sentence.tokens.size());
    for (const auto &token : sentence.tokens) {
      ids.push_back(vocab.IdOrUnk(token));
    }
    counts.AddSentence(ids, sentence.count);
  }

  // Surviving n-grams per order: count above cutoff, or prefix of a
  // survivor one order up.
  std::vector<std::unordered_set<NGramKey>> kept(order);
  for (int k = order; k >= 1; --k) {
    for (const auto &[key, count] : counts.Raw(k)) {
      if (count > cutoffs[k - 1]) kept[k - 1].insert(key);
    }
    if (k < order) {
      for (const auto &key : kept[k]) {
        kept[k - 1].insert(key.substr(0, key.size() - sizeof(TokenId)));
      }
    }
  }

  // Estimation counts: raw at the top order; distinct-predecessor counts
  // below, except n-grams starting with <s> which keep raw counts.
  std::vector<std::unordered_map<NGramKey, int64_t>> est(order);
  est[order - 1].reserve(kept[order - 1].size());
  for (const auto &key : kept[order - 1]) {
    est[order - 1][key] = counts.Raw(order).at(key);
  }
  for (int k = order - 1; k >= 1; --k) {
    std::unordered_map<NGramKey, int64_t> continuation;
    for (const auto &key : kept[k]) {
      continuation[key.substr(sizeof(TokenId))] += 1;
    }
    est[k - 1].reserve(kept[k - 1].size());
    for (const auto &key : kept[k - 1]) {
      std::vector<TokenId> tokens = KeyTokens(key);
      if (tokens.front() == Vocabulary::kBos) {
        est[k - 1][key] = counts.Raw(k).at(key);
      } else {
        auto it = continuation.find(key);
        est[k - 1][key] = it == continuation.end() ? 0 : it->second;
      }
    }
  }

  // The unigram table always carries every vocabulary word (plus <unk>)
  // so that backoff evaluation is total over the event vocabulary.
  for (TokenId id = 0; id < static_cast<TokenId>(vocab.Size()); ++id) {
    NGramKey key = MakeKey({&id, 1});
    kept[0].insert(key);
    est[0].try_emplace(key, id == Vocabulary::kBos ? 0 : est[0][key]);
  }

  std::vector<Discounts> discounts(order);
  for (int k = 1; k <= order; ++k) {
    int64_t n[5] = {0, 0, 0, 0, 0};
    for (const auto &[key, count] : est[k - 1]) {
      if (KeyTokens(key).back() == Vocabulary::kBos) continue;
      if (count >= 1 && count <= 4) ++n[count];
    }
    discounts[k - 1] = EstimateDiscounts(n[1], n[2], n[3], n[4]);
  }

  NGramModel model(order, vocab, cutoffs);

  // Event vocabulary: everything but <s>.
  const int64_t num_events = static_cast<int64_t>(vocab.Size()) - 1;
  const double uniform = 1.0 / static_cast<double>(num_events);

  // Interpolated probabilities, estimated bottom-up; the backoff weights of
  // order k are fixed right after the order k+1 probabilities, which is
  // when the backoff evaluation below them becomes complete.
  for (int k = 1; k <= order; ++k) {
    // Group surviving order-k grams by context (sorted for determinism).
    std::map<NGramKey, std::vector<std::pair<TokenId, int64_t>>> by_context;
    for (const auto &key : kept[k - 1]) {
      std::vector<TokenId> tokens = KeyTokens(key);
      if (k == 1 && tokens[0] == Vocabulary::kBos) continue;  // never predicted
      NGramKey context = key.substr(0, key.size() - sizeof(TokenId));
      by_context[context].emplace_back(tokens.back(), est[k - 1].at(key));
    }
    const Discounts &disc = discounts[k - 1];
    for (auto &[context_key, followers] : by_context) {
      std::sort(followers.begin(), followers.end());
      std::vector<TokenId> context = KeyTokens(context_key);
      int64_t total = 0;
      int64_t n1 = 0, n2 = 0, n3 = 0;
      for (const auto &[w, c] : followers) {
        total += c;
        if (c == 1) ++n1;
        if (c == 2) ++n2;
        if (c >= 3) ++n3;
      }
      for (const auto &[w, c] : followers) {
        double lower =
            k == 1 ? uniform
                   : std::pow(10.0, model.LogProbIds(
                                        {context.data() + 1, context.size() - 1},
                                        w));
        double prob;
        if (total == 0) {
          prob = lower;  // no direct evidence at all
        } else {
          double direct =
              std::max(0.0, static_cast<double>(c) - disc.For(c)) / total;
          double gamma =
              (disc.d1 * n1 + disc.d2 * n2 + disc.d3 * n3) / total;
          prob = direct + gamma * lower;
        }
        if (prob < kMinProb) prob = kMinProb;
        std::vector<TokenId> gram = context;
        gram.push_back(w);
        model.SetEntry(gram, std::log10(prob), 0.0);
      }
    }
    if (k == 1) {
      TokenId bos = Vocabulary::kBos;
      model.SetEntry({&bos, 1}, kNeverPredictedLog10, 0.0);
    }
    if (k >= 2) RecomputeBackoffWeights(&model, k - 1);
  }
  return model;
}

}  // namespace ngram
}  // namespace geoasr
