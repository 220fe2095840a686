// graph/first_pass.cc
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

#include "graph/first_pass.h"

namespace geoasr {
namespace graph {

DecodeGraph AssembleFirstPass(
    const wfst::Fst &lexicon_fst, const wfst::Fst &gbi_fst,
    const ngram::NGramModel *base, const ngram::NGramModel *geo,
    double lambda, wfst::SymbolTablePtr word_syms,
    std::shared_ptr<const InterpolationTables> tables) {
  wfst::CheckComposable(lexicon_fst, gbi_fst);
  DecodeGraph out;
  out.static_side =
      std::make_unique<wfst::LazyComposition>(lexicon_fst, gbi_fst);
  out.scorer = std::make_unique<InterpolatedLmScorer>(
      base, geo, lambda, word_syms, std::move(tables));
  out.graph = std::make_unique<ScorerComposition>(
      out.static_side.get(), out.scorer.get(), /*cancel_static_weights=*/true);
  return out;
}

DecodeGraph AssembleDirectRoute(const wfst::Fst &lexicon_fst,
                                const ngram::NGramModel *base,
                                const ngram::NGramModel *geo, double lambda,
                                wfst::SymbolTablePtr word_syms) {
  DecodeGraph out;
  out.static_side = std::make_unique<wfst::FstSearchGraph>(lexicon_fst);
  out.scorer = std::make_unique<InterpolatedLmScorer>(base, geo, lambda,
                                                      word_syms);
  out.graph = std::make_unique<ScorerComposition>(
      out.static_side.get(), out.scorer.get(),
      /*cancel_static_weights=*/false);
  return out;
}

}  // namespace graph
}  // namespace geoasr
