// graph/ngram_fst.cc
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

#include "graph/ngram_fst.h"

#include <cmath>
#include <map>
#include <vector>

#include "graph/history.h"

namespace geoasr {
namespace graph {

namespace {

using ngram::NGramModel;
using ngram::TokenId;
using ngram::Vocabulary;

void ValidateNormalization(const NGramModel &model,
                           const std::map<Context, int> &contexts,
                           double tolerance) {
  for (const auto &[context, unused] : contexts) {
    double mass = 0.0;
    for (TokenId w = 0; w < static_cast<TokenId>(model.Vocab().Size()); ++w) {
      if (w == Vocabulary::kBos) continue;
      mass += model.Prob(context, w);
    }
    GEOASR_CHECK(std::abs(mass - 1.0) <= tolerance)
        << "unnormalized context (mass " << mass << ") in n-gram model";
  }
}

}  // namespace

wfst::Fst NgramToFst(const NGramModel &model,
                     const wfst::SymbolTablePtr &word_syms,
                     const NgramFstOptions &options) {
  std::map<Context, int> contexts = CollectContexts<int>(model);
  if (options.validate_normalization) {
    ValidateNormalization(model, contexts, options.normalization_tolerance);
  }

  wfst::Fst fst;
  fst.SetInputSymbols(word_syms);
  fst.SetOutputSymbols(word_syms);
  for (auto &[context, state] : contexts) state = fst.AddState();

  const size_t max_context = static_cast<size_t>(model.Order()) - 1;
  auto destination = [&](Context history) {
    if (history.size() > max_context) {
      history.erase(history.begin(),
                    history.end() - static_cast<long>(max_context));
    }
    return ResolveSuffix(contexts, history).second;
  };

  // Word arcs and end-of-sentence finals.
  for (int k = 1; k <= model.Order(); ++k) {
    for (const auto &gram : model.SortedNGrams(k)) {
      TokenId w = gram.back();
      if (w == Vocabulary::kBos) continue;
      Context context(gram.begin(), gram.end() - 1);
      int state = contexts.at(context);
      double cost = kLn10 * -model.FindEntry(gram)->log10_prob;
      if (w == Vocabulary::kEos) {
        fst.SetFinal(state, cost);
        continue;
      }
      int symbol = word_syms->Find(model.Vocab().Symbol(w));
      GEOASR_CHECK(symbol > 0)
          << "model word missing from symbol table: "
          << model.Vocab().Symbol(w);
      Context next = context;
      next.push_back(w);
      fst.AddArc(state, {symbol, symbol, cost, destination(next)});
    }
  }

  // Backoff arcs.
  for (const auto &[context, state] : contexts) {
    if (context.empty()) continue;
    const ngram::NGramEntry *entry = model.FindEntry(context);
    double bow = entry ? entry->log10_bow : 0.0;
    Context shorter(context.begin() + 1, context.end());
    fst.AddArc(state, {wfst::kEpsilon, wfst::kEpsilon, kLn10 * -bow,
                       ResolveSuffix(contexts, shorter).second});
  }

  fst.SetStart(destination({Vocabulary::kBos}));
  return fst;
}

wfst::Fst DenseInterpolatedFst(const NGramModel &base, const NGramModel &geo,
                               double lambda,
                               const wfst::SymbolTablePtr &word_syms) {
  GEOASR_CHECK(lambda >= 0.0 && lambda <= 1.0)
      << "lambda must be in [0,1], got " << lambda;

  // Per-model translation from the shared word symbols.
  std::vector<TokenId> to_base = TranslationTable(base, *word_syms);
  std::vector<TokenId> to_geo = TranslationTable(geo, *word_syms);

  // Union context set, in shared symbol ids.
  std::map<Context, int> contexts;
  LiftContexts(base, *word_syms, &contexts);
  LiftContexts(geo, *word_syms, &contexts);

  wfst::Fst fst;
  fst.SetInputSymbols(word_syms);
  fst.SetOutputSymbols(word_syms);
  for (auto &[context, state] : contexts) state = fst.AddState();

  const size_t max_context =
      static_cast<size_t>(std::max(base.Order(), geo.Order())) - 1;

  auto model_logprob = [](const NGramModel &m,
                          const std::vector<TokenId> &to_model,
                          const Context &history, int word_sym) {
    std::vector<TokenId> h;
    h.reserve(history.size());
    for (TokenId sym : history) h.push_back(to_model[sym]);
    return m.LogProbIds(h, to_model[word_sym]);
  };
  auto mixed_cost = [&](const Context &history, int word_sym) {
    double pb = std::pow(10.0, model_logprob(base, to_base, history, word_sym));
    double pg = std::pow(10.0, model_logprob(geo, to_geo, history, word_sym));
    double mix = lambda * pb + (1.0 - lambda) * pg;
    return -std::log(mix);
  };

  const int bos = word_syms->Find(Vocabulary::kBosSymbol);
  const int eos = word_syms->Find(Vocabulary::kEosSymbol);
  const int unk = word_syms->Find(Vocabulary::kUnkSymbol);
  for (const auto &[context, state] : contexts) {
    for (size_t sym = 1; sym < word_syms->Size(); ++sym) {
      int word = static_cast<int>(sym);
      if (word == bos) continue;
      if (word == eos) {
        fst.SetFinal(state, mixed_cost(context, word));
        continue;
      }
      // The hypothesis space is the base model's event vocabulary, exactly
      // as when the base grammar is compiled into the static graph; words
      // known only to the geo model (or to neither) are not proposed.
      if (to_base[word] == Vocabulary::kUnk && word != unk) continue;
      Context next = context;
      next.push_back(static_cast<TokenId>(word));
      if (next.size() > max_context) {
        next.erase(next.begin(),
                   next.end() - static_cast<long>(max_context));
      }
      fst.AddArc(state, {word, word, mixed_cost(context, word),
                         ResolveSuffix(contexts, next).second});
    }
  }
  fst.SetStart(
      ResolveSuffix(contexts, {static_cast<TokenId>(bos)}).second);
  return fst;
}

}  // namespace graph
}  // namespace geoasr
