// graph/scorer.cc
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

#include "graph/scorer.h"

#include <cmath>
#include <cstring>

namespace geoasr {
namespace graph {

using ngram::TokenId;
using ngram::Vocabulary;

std::shared_ptr<const InterpolationTables> BuildInterpolationTables(
    const ngram::NGramModel &base, const ngram::NGramModel &geo,
    const wfst::SymbolTable &word_syms) {
  auto tables = std::make_shared<InterpolationTables>();
  tables->to_base = TranslationTable(base, word_syms);
  tables->to_geo = TranslationTable(geo, word_syms);
  LiftContexts(base, word_syms, &tables->contexts);
  LiftContexts(geo, word_syms, &tables->contexts);
  tables->max_context =
      static_cast<size_t>(std::max(base.Order(), geo.Order())) - 1;
  return tables;
}

InterpolatedLmScorer::InterpolatedLmScorer(
    const ngram::NGramModel *base, const ngram::NGramModel *geo,
    double lambda, wfst::SymbolTablePtr word_syms,
    std::shared_ptr<const InterpolationTables> tables)
    : base_(base),
      geo_(geo),
      lambda_(lambda),
      word_syms_(std::move(word_syms)),
      tables_(std::move(tables)) {
  GEOASR_CHECK(lambda_ >= 0.0 && lambda_ <= 1.0)
      << "lambda must be in [0,1], got " << lambda_;
  if (!tables_) {
    tables_ = BuildInterpolationTables(*base_, *geo_, *word_syms_);
  }
}

int InterpolatedLmScorer::Intern(const Context &history) {
  auto [it, inserted] =
      state_ids_.emplace(history, static_cast<int>(states_.size()));
  if (inserted) {
    states_.push_back(history);
    final_cache_.push_back(wfst::kInfiniteCost);
  }
  return it->second;
}

int InterpolatedLmScorer::Start() {
  int bos = word_syms_->Find(Vocabulary::kBosSymbol);
  Context start{static_cast<TokenId>(bos)};
  return Intern(ResolveSuffix(tables_->contexts, start).first);
}

double InterpolatedLmScorer::MixCost(const Context &history,
                                     int word_sym) const {
  auto eval = [&](const ngram::NGramModel &m,
                  const std::vector<TokenId> &table) {
    Context h;
    h.reserve(history.size());
    for (TokenId sym : history) h.push_back(table[sym]);
    return std::pow(10.0, m.LogProbIds(h, table[word_sym]));
  };
  double mix = lambda_ * eval(*base_, tables_->to_base) +
               (1.0 - lambda_) * eval(*geo_, tables_->to_geo);
  return -std::log(mix);
}

std::pair<int, double> InterpolatedLmScorer::Step(int state, int word_sym) {
  GEOASR_CHECK(word_sym > 0 &&
               word_sym < static_cast<int>(word_syms_->Size()))
      << "word symbol " << word_sym << " out of range";
  uint64_t key =
      (static_cast<uint64_t>(state) << 32) | static_cast<uint64_t>(word_sym);
  auto it = step_cache_.find(key);
  if (it != step_cache_.end()) return it->second;

  const Context &history = states_[state];
  double cost = MixCost(history, word_sym);
  Context next = history;
  next.push_back(static_cast<TokenId>(word_sym));
  if (next.size() > tables_->max_context) {
    next.erase(next.begin(),
               next.end() - static_cast<long>(tables_->max_context));
  }
  int next_state = Intern(ResolveSuffix(tables_->contexts, next).first);
  auto result = std::make_pair(next_state, cost);
  step_cache_.emplace(key, result);
  return result;
}

double InterpolatedLmScorer::FinalCost(int state) {
  if (final_cache_[state] != wfst::kInfiniteCost) return final_cache_[state];
  int eos = word_syms_->Find(Vocabulary::kEosSymbol);
  double cost = MixCost(states_[state], eos);
  final_cache_[state] = cost;
  return cost;
}

double InterpolatedLmScorer::WordCost(const std::vector<int> &history_syms,
                                      int word_sym) const {
  Context history;
  history.reserve(history_syms.size());
  for (int s : history_syms) history.push_back(static_cast<TokenId>(s));
  if (history.size() > tables_->max_context) {
    history.erase(history.begin(),
                  history.end() - static_cast<long>(tables_->max_context));
  }
  return MixCost(history, word_sym);
}

ScoredSequence ScoreWordSequence(LmScorer *scorer,
                                 const std::vector<int> &word_syms) {
  ScoredSequence out;
  int state = scorer->Start();
  for (int w : word_syms) {
    auto [next, cost] = scorer->Step(state, w);
    out.word_costs.push_back(cost);
    state = next;
  }
  out.final_cost = scorer->FinalCost(state);
  return out;
}

ScorerComposition::ScorerComposition(wfst::SearchGraph *static_part,
                                     LmScorer *scorer,
                                     bool cancel_static_weights)
    : static_part_(static_part), scorer_(scorer),
      cancel_(cancel_static_weights) {
  if (static_part_->Start() != wfst::kNoState) {
    start_ = Intern(static_part_->Start(), scorer_->Start(), 0.0);
  }
}

int ScorerComposition::Start() { return start_; }

int ScorerComposition::Intern(int static_state, int scorer_state,
                              double pending) {
  uint64_t bits;
  static_assert(sizeof(bits) == sizeof(pending));
  std::memcpy(&bits, &pending, sizeof(bits));
  TupleKey key{static_state, scorer_state, bits};
  auto [it, inserted] = ids_.emplace(key, static_cast<int>(tuples_.size()));
  if (inserted) {
    tuples_.push_back({static_state, scorer_state, pending});
    arcs_.emplace_back();
    expanded_.push_back(false);
  }
  return it->second;
}

std::span<const wfst::Arc> ScorerComposition::Arcs(int state) {
  GEOASR_CHECK(state >= 0 && state < static_cast<int>(tuples_.size()))
      << "composition state " << state << " out of range";
  if (!expanded_[state]) {
    expanded_[state] = true;
    Tuple t = tuples_[state];
    std::vector<wfst::Arc> out;
    for (const wfst::Arc &arc : static_part_->Arcs(t.static_state)) {
      if (arc.olabel == wfst::kEpsilon) {
        double pending = cancel_ ? t.pending + arc.weight : 0.0;
        out.push_back({arc.ilabel, wfst::kEpsilon, arc.weight,
                       Intern(arc.nextstate, t.scorer_state, pending)});
      } else {
        auto [next_scorer, cost] = scorer_->Step(t.scorer_state, arc.olabel);
        double weight =
            cancel_ ? cost - t.pending : arc.weight + cost;
        out.push_back({arc.ilabel, arc.olabel, weight,
                       Intern(arc.nextstate, next_scorer, 0.0)});
      }
    }
    arcs_[state] = std::move(out);
  }
  return arcs_[state];
}

double ScorerComposition::Final(int state) {
  GEOASR_CHECK(state >= 0 && state < static_cast<int>(tuples_.size()))
      << "composition state " << state << " out of range";
  const Tuple &t = tuples_[state];
  double fs = static_part_->Final(t.static_state);
  if (fs == wfst::kInfiniteCost) return wfst::kInfiniteCost;
  double fc = scorer_->FinalCost(t.scorer_state);
  return cancel_ ? fc - t.pending : fs + fc;
}

}  // namespace graph
}  // namespace geoasr
