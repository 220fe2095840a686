// graph/scorer.h
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
// On-demand word-level grammar scores and their lazy composition with a
// static graph.  The scorer plays the F role of difference-LM decoding: the
// static part carries a small grammar whose cost is cancelled path-wise
// while the scorer charges the full interpolated cost per word.

#ifndef GEOASR_GRAPH_SCORER_H_
#define GEOASR_GRAPH_SCORER_H_

#include <memory>
#include <unordered_map>
#include <vector>

#include "graph/history.h"
#include "ngram/model.h"
#include "wfst/fst.h"

namespace geoasr {
namespace graph {

// Deterministic, epsilon-free acceptor over word symbols exposed as an
// on-demand score provider.  Costs are natural-log domain.
class LmScorer {
 public:
  virtual ~LmScorer() = default;
  virtual int Start() = 0;
  // Consumes one word symbol: (next state, cost).
  virtual std::pair<int, double> Step(int state, int word_sym) = 0;
  // End-of-sentence cost.
  virtual double FinalCost(int state) = 0;
};

// Immutable precomputation shared by every scorer over one model pair:
// symbol translations and the union of stored contexts.  Safe to share
// across concurrent decodes.
struct InterpolationTables {
  std::vector<ngram::TokenId> to_base;
  std::vector<ngram::TokenId> to_geo;
  std::map<Context, char> contexts;
  size_t max_context = 0;
};

std::shared_ptr<const InterpolationTables> BuildInterpolationTables(
    const ngram::NGramModel &base, const ngram::NGramModel &geo,
    const wfst::SymbolTable &word_syms);

// Linear interpolation of two backoff models:
//   cost(w | h) = -ln( lambda P_base(w|h) + (1-lambda) P_geo(w|h) ),
// with lambda = 1 reproducing the baseline exactly and lambda = 0 the geo
// model.  States are histories canonicalized against the union of both
// models' stored contexts, so equal-distribution histories share a state.
class InterpolatedLmScorer : public LmScorer {
 public:
  // Models must outlive the scorer.  geo may equal base.  The tables may be
  // shared across scorers of the same model pair; when null they are built
  // here.
  InterpolatedLmScorer(const ngram::NGramModel *base,
                       const ngram::NGramModel *geo, double lambda,
                       wfst::SymbolTablePtr word_syms,
                       std::shared_ptr<const InterpolationTables> tables =
                           nullptr);

  int Start() override;
  std::pair<int, double> Step(int state, int word_sym) override;
  double FinalCost(int state) override;

  // Exact mixture cost for a word after an explicit history, outside
  // the incremental state machinery (used by rescoring and score checks).
  double WordCost(const std::vector<int> &history_syms, int word_sym) const;

 private:
  int Intern(const Context &history);
  double MixCost(const Context &history, int word_sym) const;

  const ngram::NGramModel *base_;
  const ngram::NGramModel *geo_;
  double lambda_;
  wfst::SymbolTablePtr word_syms_;
  std::shared_ptr<const InterpolationTables> tables_;

  std::map<Context, int> state_ids_;
  std::vector<Context> states_;
  std::unordered_map<uint64_t, std::pair<int, double>> step_cache_;
  std::vector<double> final_cache_;
};

// Cost of a full word sequence through a scorer: per-word costs plus the
// end-of-sentence cost.
struct ScoredSequence {
  std::vector<double> word_costs;
  double final_cost = 0.0;

  double Total() const {
    double t = final_cost;
    for (double c : word_costs) t += c;
    return t;
  }
};
ScoredSequence ScoreWordSequence(LmScorer *scorer,
                                 const std::vector<int> &word_syms);

// Lazy composition of a static graph with a scorer.  Input labels drive the
// decoder; scorer steps fire on output (word) labels.  In cancel mode every
// static weight is refunded when the next word (or the final state) is
// reached, so a path's total graph cost is exactly the scorer's cost for
// its word sequence; the transient static costs still guide pruning.
// Requires all static weights to be grammar scores (zero-cost lexicon).
class ScorerComposition : public wfst::SearchGraph {
 public:
  ScorerComposition(wfst::SearchGraph *static_part, LmScorer *scorer,
                    bool cancel_static_weights);

  int Start() override;
  std::span<const wfst::Arc> Arcs(int state) override;
  double Final(int state) override;

  size_t NumExpandedStates() const { return tuples_.size(); }

 private:
  struct Tuple {
    int static_state;
    int scorer_state;
    double pending;  // static cost charged since the last word boundary
  };

  int Intern(int static_state, int scorer_state, double pending);

  wfst::SearchGraph *static_part_;
  LmScorer *scorer_;
  bool cancel_;

  struct TupleKey {
    int s;
    int f;
    uint64_t pending_bits;
    bool operator==(const TupleKey &o) const {
      return s == o.s && f == o.f && pending_bits == o.pending_bits;
    }
  };
  struct TupleKeyHash {
    size_t operator()(const TupleKey &k) const {
      uint64_t h = static_cast<uint64_t>(k.s) * 0x9E3779B97F4A7C15ULL;
      h ^= static_cast<uint64_t>(k.f) + 0x9E3779B97F4A7C15ULL * h;
      h ^= k.pending_bits + 0x9E3779B97F4A7C15ULL * h;
      return static_cast<size_t>(h);
    }
  };
  std::unordered_map<TupleKey, int, TupleKeyHash> ids_;
  std::vector<Tuple> tuples_;
  std::vector<std::vector<wfst::Arc>> arcs_;
  std::vector<bool> expanded_;
  int start_ = wfst::kNoState;
};

}  // namespace graph
}  // namespace geoasr

#endif  // GEOASR_GRAPH_SCORER_H_
