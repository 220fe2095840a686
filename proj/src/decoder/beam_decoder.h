// decoder/beam_decoder.h
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
// Time-synchronous token-passing beam search.  Each frame consumes one
// non-epsilon input arc; epsilon (backoff) arcs are expanded to closure
// within the frame; tokens outside the beam around the frame-best total
// cost are dropped.  Output is an n-best list of unique word sequences
// with factored acoustic and grammar costs.

#ifndef GEOASR_DECODER_BEAM_DECODER_H_
#define GEOASR_DECODER_BEAM_DECODER_H_

#include <string>
#include <vector>

#include "decoder/emission.h"
#include "wfst/fst.h"

namespace geoasr {
namespace decoder {

struct DecoderOptions {
  double beam = 16.0;
  int nbest = 20;
  double lm_scale = 1.0;
  // Tokens kept per state; raise alongside nbest for exhaustive extraction.
  int tokens_per_state = 0;  // 0: max(nbest, 4)
};

struct Hypothesis {
  std::vector<int> words;  // word symbol ids, in order
  std::vector<int> units;  // consumed unit ids (derived character sequence)
  double total_cost = 0.0;
  double acoustic_cost = 0.0;
  double lm_cost = 0.0;  // graph cost including the final weight
};

struct NBestList {
  std::string utt_id;
  int province_id = -1;
  std::vector<Hypothesis> hyps;
};

// Thrown with the frame index when pruning leaves no token alive.
class EmptyBeamError : public std::runtime_error {
 public:
  EmptyBeamError(int frame, double beam)
      : std::runtime_error("empty beam at frame " + std::to_string(frame) +
                           " (beam " + std::to_string(beam) + ")"),
        frame_(frame) {}
  int frame() const { return frame_; }

 private:
  int frame_;
};

NBestList Decode(wfst::SearchGraph *graph, const EmissionSequence &emissions,
                 const DecoderOptions &options);

// Acoustic cost of a hypothesis recomputed from the emissions alone.
double RecomputeAcousticCost(const Hypothesis &hyp,
                             const EmissionSequence &emissions);

// (acoustic, grammar) component pair; total = acoustic + lm_scale * grammar.
inline std::pair<double, double> ScoreBreakdown(const Hypothesis &hyp) {
  return {hyp.acoustic_cost, hyp.lm_cost};
}

// N-best text: `utt<TAB>rank<TAB>province<TAB>total<TAB>acoustic<TAB>lm<TAB>
// w1 w2 ...`, words as strings.
std::string NBestToText(const NBestList &nbest,
                        const wfst::SymbolTable &word_syms);
// Parses one or more utterances' worth of lines.
struct TextHypothesis {
  std::string utt_id;
  int rank = 0;
  int province_id = -1;
  double total_cost = 0.0;
  double acoustic_cost = 0.0;
  double lm_cost = 0.0;
  std::vector<std::string> words;
};
std::vector<TextHypothesis> NBestFromText(const std::string &text);

}  // namespace decoder
}  // namespace geoasr

#endif  // GEOASR_DECODER_BEAM_DECODER_H_
