// graph/first_pass.h
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
// First-pass decoding graph assembly: the lexicon composed with the bigram
// grammar forms the (shared, immutable) static side, and each decode owns a
// lazy composition with the interpolated scorer that cancels the bigram
// scores and charges the full mixture instead.

#ifndef GEOASR_GRAPH_FIRST_PASS_H_
#define GEOASR_GRAPH_FIRST_PASS_H_

#include <memory>

#include "graph/scorer.h"
#include "wfst/lazy.h"

namespace geoasr {
namespace graph {

// Per-decode graph; the referenced FSTs and models must stay alive.
struct DecodeGraph {
  std::unique_ptr<wfst::SearchGraph> static_side;
  std::unique_ptr<LmScorer> scorer;
  std::unique_ptr<ScorerComposition> graph;
};

// Difference-LM route: static side L o G_bi (composed on the fly), scorer
// charging -ln(lambda P_base + (1-lambda) P_geo) per word with the static
// grammar cost cancelled path-wise.  geo may equal base; lambda = 1 decodes
// with the baseline only.  Passing prebuilt interpolation tables avoids
// per-decode recomputation when many decodes share a model pair.
DecodeGraph AssembleFirstPass(
    const wfst::Fst &lexicon_fst, const wfst::Fst &gbi_fst,
    const ngram::NGramModel *base, const ngram::NGramModel *geo,
    double lambda, wfst::SymbolTablePtr word_syms,
    std::shared_ptr<const InterpolationTables> tables = nullptr);

// Direct route used by oracles and boundary checks: the lexicon alone as
// static side (no bigram grammar, no cancellation), all grammar cost from
// the scorer.
DecodeGraph AssembleDirectRoute(const wfst::Fst &lexicon_fst,
                                const ngram::NGramModel *base,
                                const ngram::NGramModel *geo, double lambda,
                                wfst::SymbolTablePtr word_syms);

}  // namespace graph
}  // namespace geoasr

#endif  // GEOASR_GRAPH_FIRST_PASS_H_
