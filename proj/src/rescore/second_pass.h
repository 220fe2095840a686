// rescore/second_pass.h
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
// Second-pass character-level rescoring.  Per character position the pass-2
// probability mixes the character baseline, the pluggable rescorer, and the
// character geo model; the final probability mixes pass 1 and pass 2.
// First-pass word probabilities are expanded to characters by assigning each
// word's probability to its first character (continuations get 1), which
// reconstructs the word-level cost exactly.

#ifndef GEOASR_RESCORE_SECOND_PASS_H_
#define GEOASR_RESCORE_SECOND_PASS_H_

#include "decoder/beam_decoder.h"
#include "graph/lexicon.h"
#include "rescore/rescorer.h"

namespace geoasr {
namespace rescore {

struct InterpolationConfig {
  double lambda = 0.5;  // first-pass baseline/geo mix
  double alpha = 0.4;   // pass-2 character baseline share
  double beta = 0.3;    // pass-2 rescorer share; geo gets 1-alpha-beta
  double gamma = 0.5;   // pass-1 share in the final combination

  void Validate() const;
};

// alpha p_base + beta p_rescorer + (1-alpha-beta) p_geo.
double SecondPassProb(double p_base, double p_rescorer, double p_geo,
                      const InterpolationConfig &config);

// Per-position gamma p1 + (1-gamma) p2; throws on length mismatch between
// the passes.
std::vector<double> CombinePasses(const std::vector<double> &pass1,
                                  const std::vector<double> &pass2,
                                  double gamma);

struct RescoredHypothesis {
  decoder::TextHypothesis hyp;
  double second_pass_cost = 0.0;  // -sum ln p2 over positions
  double combined_cost = 0.0;     // acoustic + lm_scale * -sum ln combined
  int rank_delta = 0;             // first-pass rank minus new rank
};

struct RescoreModels {
  const ngram::NGramModel *word_base = nullptr;
  const ngram::NGramModel *word_geo = nullptr;  // may equal word_base
  const ngram::NGramModel *char_base = nullptr;
  const ngram::NGramModel *char_geo = nullptr;  // may equal char_base
  const Rescorer *rescorer = nullptr;
  const graph::Lexicon *lexicon = nullptr;
};

// Rescores one utterance's hypotheses and re-ranks by combined cost.
std::vector<RescoredHypothesis> RescoreNBest(
    const std::vector<decoder::TextHypothesis> &hyps,
    const RescoreModels &models, const InterpolationConfig &config,
    double lm_scale = 1.0);

// Rescored text: first-pass columns plus combined cost and rank delta,
// words last.
std::string RescoredToText(const std::vector<RescoredHypothesis> &hyps);
std::vector<RescoredHypothesis> RescoredFromText(const std::string &text);

}  // namespace rescore
}  // namespace geoasr

#endif  // GEOASR_RESCORE_SECOND_PASS_H_
