// ngram/model.cc
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

#include "ngram/model.h"

#include <algorithm>
#include <cmath>

namespace geoasr {
namespace ngram {

NGramModel::NGramModel(int order, Vocabulary vocab, std::vector<int> cutoffs)
    : order_(order), vocab_(std::move(vocab)), cutoffs_(std::move(cutoffs)) {
  GEOASR_CHECK(order_ >= 1) << "order must be >= 1, got " << order_;
  if (cutoffs_.empty()) cutoffs_.assign(order_, 0);
  GEOASR_CHECK(static_cast<int>(cutoffs_.size()) == order_)
      << "cutoff list length " << cutoffs_.size() << " != order " << order_;
  tables_.resize(order_);
}

void NGramModel::SetEntry(std::span<const TokenId> tokens, double log10_prob,
                          double log10_bow) {
  GEOASR_CHECK(!tokens.empty() &&
               tokens.size() <= static_cast<size_t>(order_))
      << "n-gram length " << tokens.size() << " out of range";
  tables_[tokens.size() - 1][MakeKey(tokens)] =
      NGramEntry{log10_prob, log10_bow};
}

const NGramEntry *NGramModel::FindEntry(
    std::span<const TokenId> tokens) const {
  if (tokens.empty() || tokens.size() > static_cast<size_t>(order_)) {
    return nullptr;
  }
  const auto &table = tables_[tokens.size() - 1];
  auto it = table.find(MakeKey(tokens));
  return it == table.end() ? nullptr : &it->second;
}

size_t NGramModel::NumEntries(int k) const {
  GEOASR_CHECK(k >= 1 && k <= order_) << "order " << k << " out of range";
  return tables_[k - 1].size();
}

size_t NGramModel::TotalEntries() const {
  size_t total = 0;
  for (const auto &t : tables_) total += t.size();
  return total;
}

std::vector<std::vector<TokenId>> NGramModel::SortedNGrams(int k) const {
  GEOASR_CHECK(k >= 1 && k <= order_) << "order " << k << " out of range";
  std::vector<std::vector<TokenId>> grams;
  grams.reserve(tables_[k - 1].size());
  for (const auto &[key, entry] : tables_[k - 1]) {
    grams.push_back(KeyTokens(key));
  }
  std::sort(grams.begin(), grams.end());
  return grams;
}

double NGramModel::LogProbIds(std::span<const TokenId> history,
                              TokenId word) const {
  size_t max_context = static_cast<size_t>(order_) - 1;
  if (history.size() > max_context) {
    history = history.subspan(history.size() - max_context);
  }
  double accumulated_bow = 0.0;
  std::vector<TokenId> gram(history.begin(), history.end());
  gram.push_back(word);
  while (true) {
    if (const NGramEntry *e = FindEntry(gram)) {
      return e->log10_prob + accumulated_bow;
    }
    if (gram.size() == 1) {
      // Word absent even as a unigram: treat like <unk>.
      std::vector<TokenId> unk{Vocabulary::kUnk};
      const NGramEntry *e = FindEntry(unk);
      return (e ? e->log10_prob : kNeverPredictedLog10) + accumulated_bow;
    }
    std::span<const TokenId> context(gram.data(), gram.size() - 1);
    if (const NGramEntry *c = FindEntry(context)) {
      accumulated_bow += c->log10_bow;
    }
    gram.erase(gram.begin());
  }
}

double NGramModel::LogProb(std::span<const std::string> history,
                           const std::string &word) const {
  std::vector<TokenId> ids;
  ids.reserve(history.size());
  for (const auto &h : history) ids.push_back(vocab_.IdOrUnk(h));
  return LogProbIds(ids, vocab_.IdOrUnk(word));
}

double NGramModel::Prob(std::span<const TokenId> history, TokenId word) const {
  return std::pow(10.0, LogProbIds(history, word));
}

void RecomputeBackoffWeights(NGramModel *model, int context_order) {
  GEOASR_CHECK(context_order >= 1 && context_order < model->Order())
      << "context order " << context_order << " out of range";
  // Group order-(k+1) grams by their length-k prefix.
  std::unordered_map<NGramKey, std::vector<TokenId>> followers;
  for (const auto &gram : model->SortedNGrams(context_order + 1)) {
    NGramKey prefix = MakeKey({gram.data(), gram.size() - 1});
    followers[prefix].push_back(gram.back());
  }
  for (const auto &context : model->SortedNGrams(context_order)) {
    const NGramEntry *entry = model->FindEntry(context);
    auto it = followers.find(MakeKey(context));
    if (it == followers.end()) {
      model->SetEntry(context, entry->log10_prob, 0.0);
      continue;
    }
    std::span<const TokenId> backoff_context{context.data() + 1,
                                             context.size() - 1};
    double stored_mass = 0.0;
    double lower_mass = 0.0;
    for (TokenId w : it->second) {
      std::vector<TokenId> gram = context;
      gram.push_back(w);
      stored_mass += std::pow(10.0, model->FindEntry(gram)->log10_prob);
      lower_mass += std::pow(10.0, model->LogProbIds(backoff_context, w));
    }
    double num = std::max(0.0, 1.0 - stored_mass);
    double den = std::max(0.0, 1.0 - lower_mass);
    double bow = (den <= 1e-12) ? 1.0 : num / den;
    if (bow <= 0.0) bow = 1e-12;
    model->SetEntry(context, entry->log10_prob, std::log10(bow));
  }
}

NGramModel MakeBigramSubset(const NGramModel &model) {
  GEOASR_CHECK(model.Order() >= 2)
      << "bigram subset needs an order >= 2 model, got " << model.Order();
  std::vector<int> cutoffs{model.Cutoffs()[0], model.Cutoffs()[1]};
  NGramModel subset(2, model.Vocab(), cutoffs);
  for (const auto &gram : model.SortedNGrams(1)) {
    subset.SetEntry(gram, model.FindEntry(gram)->log10_prob, 0.0);
  }
  for (const auto &gram : model.SortedNGrams(2)) {
    subset.SetEntry(gram, model.FindEntry(gram)->log10_prob, 0.0);
  }
  RecomputeBackoffWeights(&subset, 1);
  return subset;
}

}  // namespace ngram
}  // namespace geoasr
