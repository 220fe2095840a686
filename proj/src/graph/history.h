// graph/history.h
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
// Word-history bookkeeping shared by the grammar builders and the lazy
// scorer.  A backoff model's conditional distribution depends only on the
// longest history suffix stored as a context, so histories are canonicalized
// by suffix resolution against the stored-context set.

#ifndef GEOASR_GRAPH_HISTORY_H_
#define GEOASR_GRAPH_HISTORY_H_

#include <map>
#include <vector>

#include "base/error.h"
#include "ngram/model.h"
#include "wfst/fst.h"

namespace geoasr {
namespace graph {

using Context = std::vector<ngram::TokenId>;

// Proper prefixes of all stored n-grams plus the empty context, in model
// token ids, each mapped to a default-constructed value.
template <typename Value>
std::map<Context, Value> CollectContexts(const ngram::NGramModel &model) {
  std::map<Context, Value> contexts;
  contexts.emplace(Context{}, Value());
  for (int k = 2; k <= model.Order(); ++k) {
    for (const auto &gram : model.SortedNGrams(k)) {
      contexts.emplace(Context(gram.begin(), gram.end() - 1), Value());
    }
  }
  return contexts;
}

// Same context set translated into shared word-symbol ids.
template <typename Value>
void LiftContexts(const ngram::NGramModel &model,
                  const wfst::SymbolTable &word_syms,
                  std::map<Context, Value> *out) {
  for (const auto &[context, unused] : CollectContexts<char>(model)) {
    Context global;
    global.reserve(context.size());
    for (ngram::TokenId id : context) {
      int sym = word_syms.Find(model.Vocab().Symbol(id));
      GEOASR_CHECK(sym >= 0) << "model context word missing from symbol "
                                "table: "
                             << model.Vocab().Symbol(id);
      global.push_back(static_cast<ngram::TokenId>(sym));
    }
    out->emplace(std::move(global), Value());
  }
}

// Longest suffix of `history` present in `contexts`; the empty context is
// always present so this cannot fail.
template <typename Map>
const typename Map::value_type &ResolveSuffix(const Map &contexts,
                                              const Context &history) {
  for (size_t drop = 0; drop <= history.size(); ++drop) {
    auto it = contexts.find(Context(history.begin() + drop, history.end()));
    if (it != contexts.end()) return *it;
  }
  GEOASR_ERROR() << "context resolution fell through the empty context";
}

// Shared-symbol id -> model token id (unknown symbols map to <unk>).
inline std::vector<ngram::TokenId> TranslationTable(
    const ngram::NGramModel &model, const wfst::SymbolTable &word_syms) {
  std::vector<ngram::TokenId> ids(word_syms.Size(), ngram::Vocabulary::kUnk);
  for (size_t s = 1; s < word_syms.Size(); ++s) {
    ids[s] = model.Vocab().IdOrUnk(word_syms.Symbol(static_cast<int>(s)));
  }
  return ids;
}

}  // namespace graph
}  // namespace geoasr

#endif  // GEOASR_GRAPH_HISTORY_H_
