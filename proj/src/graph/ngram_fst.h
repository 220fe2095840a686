// graph/ngram_fst.h
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
// Grammar transducers built from backoff n-gram models.

#ifndef GEOASR_GRAPH_NGRAM_FST_H_
#define GEOASR_GRAPH_NGRAM_FST_H_

#include "ngram/model.h"
#include "wfst/fst.h"

namespace geoasr {
namespace graph {

inline constexpr double kLn10 = 2.302585092994045684;

struct NgramFstOptions {
  // Verify that every stored context normalizes before building.
  bool validate_normalization = true;
  double normalization_tolerance = 1e-3;
};

// Standard backoff-as-epsilon acceptor over words: one state per stored
// context, word arcs weighted -ln P, epsilon backoff arcs weighted
// -ln(backoff weight), end-of-sentence probability as final costs.  Path
// costs can undercut exact backoff evaluation only on paths mixing backoff
// and direct arcs.
wfst::Fst NgramToFst(const ngram::NGramModel &model,
                     const wfst::SymbolTablePtr &word_syms,
                     const NgramFstOptions &options = {});

// Exact, epsilon-free acceptor for the interpolated grammar
//   P(w|h) = lambda P_base(w|h) + (1-lambda) P_geo(w|h):
// one state per context stored in either model, a dense arc per event word
// with the exact mixed cost, end-of-sentence as final costs.  Feasible only
// at small scale; serves as the statically composable full grammar.
wfst::Fst DenseInterpolatedFst(const ngram::NGramModel &base,
                               const ngram::NGramModel &geo, double lambda,
                               const wfst::SymbolTablePtr &word_syms);

}  // namespace graph
}  // namespace geoasr

#endif  // GEOASR_GRAPH_NGRAM_FST_H_
