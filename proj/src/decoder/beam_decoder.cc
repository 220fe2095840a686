// decoder/beam_decoder.cc
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

#include "decoder/beam_decoder.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "base/error.h"
#include "base/stringutil.h"

namespace geoasr {
namespace decoder {

namespace {

struct Token {
  int state;
  double acoustic;
  double graph;  // accumulated graph (grammar) cost
  int back;      // arena index of the predecessor, -1 at the root
  int ilabel;
  int olabel;
  // Hash of the word (olabel) sequence so far.  Tokens carrying the same
  // sequence into the same state are duplicates (different backoff
  // routings of one hypothesis) and only the cheapest is kept.
  uint64_t word_hash;
};

uint64_t ExtendWordHash(uint64_t hash, int olabel) {
  if (olabel == 0) return hash;
  return (hash ^ static_cast<uint64_t>(olabel + 1)) * 1099511628211ULL;
}

class TokenBeam {
 public:
  TokenBeam(std::vector<Token> *arena, double lm_scale, int tokens_per_state)
      : arena_(arena), lm_scale_(lm_scale), cap_(tokens_per_state) {}

  double Total(int idx) const {
    const Token &t = (*arena_)[idx];
    return t.acoustic + lm_scale_ * t.graph;
  }

  // Inserts into the per-state list, keeping the best `cap_` by total cost
  // over distinct word sequences (earlier arrivals win ties).  Returns true
  // if the token was kept.
  bool Insert(int idx) {
    std::vector<int> &list = states_[(*arena_)[idx].state];
    double total = Total(idx);
    uint64_t hash = (*arena_)[idx].word_hash;
    for (size_t i = 0; i < list.size(); ++i) {
      if ((*arena_)[list[i]].word_hash != hash) continue;
      if (Total(list[i]) <= total) return false;
      list.erase(list.begin() + i);
      break;
    }
    auto pos = std::upper_bound(
        list.begin(), list.end(), total,
        [&](double value, int existing) { return value < Total(existing); });
    if (list.size() >= static_cast<size_t>(cap_) && pos == list.end()) {
      return false;
    }
    list.insert(pos, idx);
    if (list.size() > static_cast<size_t>(cap_)) list.pop_back();
    return true;
  }

  bool Empty() const { return states_.empty(); }

  double BestTotal() const {
    double best = wfst::kInfiniteCost;
    for (const auto &[state, list] : states_) {
      if (!list.empty()) best = std::min(best, Total(list.front()));
    }
    return best;
  }

  void Prune(double threshold) {
    for (auto it = states_.begin(); it != states_.end();) {
      auto &list = it->second;
      while (!list.empty() && Total(list.back()) > threshold) {
        list.pop_back();
      }
      it = list.empty() ? states_.erase(it) : std::next(it);
    }
  }

  // Deterministic iteration: states in increasing id order.
  const std::map<int, std::vector<int>> &States() const { return states_; }

 private:
  std::vector<Token> *arena_;
  double lm_scale_;
  int cap_;
  std::map<int, std::vector<int>> states_;
};

}  // namespace

NBestList Decode(wfst::SearchGraph *graph, const EmissionSequence &emissions,
                 const DecoderOptions &options) {
  GEOASR_CHECK(!emissions.frames.empty()) << "empty emission sequence";
  GEOASR_CHECK(options.beam > 0) << "beam must be positive";
  GEOASR_CHECK(options.nbest >= 1) << "nbest must be >= 1";
  GEOASR_CHECK(graph->Start() != wfst::kNoState) << "graph has no start state";
  int per_state = options.tokens_per_state > 0 ? options.tokens_per_state
                                               : std::max(options.nbest, 4);

  std::vector<Token> arena;
  std::vector<char> eps_expanded;
  TokenBeam beam(&arena, options.lm_scale, per_state);
  arena.push_back({graph->Start(), 0.0, 0.0, -1, 0, 0, 1469598103934665603ULL});
  eps_expanded.push_back(false);
  beam.Insert(0);

  // Epsilon (ilabel 0) closure over the current beam.  Every token is
  // expanded at most once; graphs here have acyclic epsilon structure so
  // the pass count is bounded by the longest backoff chain.
  auto close_epsilon = [&](TokenBeam *current) {
    for (int pass = 0;; ++pass) {
      GEOASR_CHECK(pass < 1000) << "epsilon cycle suspected in search graph";
      bool changed = false;
      // Snapshot: insertion during iteration must not invalidate.
      std::vector<int> snapshot;
      for (const auto &[state, list] : current->States()) {
        snapshot.insert(snapshot.end(), list.begin(), list.end());
      }
      for (int idx : snapshot) {
        if (eps_expanded[idx]) continue;
        eps_expanded[idx] = true;
        Token token = arena[idx];
        for (const wfst::Arc &arc : graph->Arcs(token.state)) {
          if (arc.ilabel != 0) continue;
          arena.push_back({arc.nextstate, token.acoustic,
                           token.graph + arc.weight, idx, arc.ilabel,
                           arc.olabel,
                           ExtendWordHash(token.word_hash, arc.olabel)});
          eps_expanded.push_back(false);
          if (current->Insert(static_cast<int>(arena.size()) - 1)) {
            changed = true;
          } else {
            arena.pop_back();
            eps_expanded.pop_back();
          }
        }
      }
      if (!changed) break;
    }
  };

  close_epsilon(&beam);

  for (size_t t = 0; t < emissions.frames.size(); ++t) {
    const std::vector<double> &frame = emissions.frames[t];
    TokenBeam next(&arena, options.lm_scale, per_state);
    for (const auto &[state, list] : beam.States()) {
      for (int idx : list) {
        Token token = arena[idx];
        for (const wfst::Arc &arc : graph->Arcs(token.state)) {
          if (arc.ilabel == 0) continue;
          double frame_cost = -frame[arc.ilabel];
          if (frame_cost == wfst::kInfiniteCost) continue;
          arena.push_back({arc.nextstate, token.acoustic + frame_cost,
                           token.graph + arc.weight, idx, arc.ilabel,
                           arc.olabel,
                           ExtendWordHash(token.word_hash, arc.olabel)});
          eps_expanded.push_back(false);
          if (!next.Insert(static_cast<int>(arena.size()) - 1)) {
            arena.pop_back();
            eps_expanded.pop_back();
          }
        }
      }
    }
    close_epsilon(&next);
    double best = next.BestTotal();
    if (best == wfst::kInfiniteCost) {
      throw EmptyBeamError(static_cast<int>(t), options.beam);
    }
    next.Prune(best + options.beam);
    if (next.Empty()) throw EmptyBeamError(static_cast<int>(t), options.beam);
    beam = std::move(next);
  }

  // Reaching a final state ends the utterance; collect and rank.
  struct Candidate {
    double total;
    double acoustic;
    double graph;
    std::vector<int> words;
    std::vector<int> units;
  };
  std::vector<Candidate> candidates;
  for (const auto &[state, list] : beam.States()) {
    double final_cost = graph->Final(state);
    if (final_cost == wfst::kInfiniteCost) continue;
    for (int idx : list) {
      Candidate c;
      c.acoustic = arena[idx].acoustic;
      c.graph = arena[idx].graph + final_cost;
      c.total = c.acoustic + options.lm_scale * c.graph;
      for (int i = idx; i != -1; i = arena[i].back) {
        if (arena[i].olabel != 0) c.words.push_back(arena[i].olabel);
        if (arena[i].ilabel != 0) c.units.push_back(arena[i].ilabel);
      }
      std::reverse(c.words.begin(), c.words.end());
      std::reverse(c.units.begin(), c.units.end());
      candidates.push_back(std::move(c));
    }
  }
  GEOASR_CHECK(!candidates.empty())
      << "no token reached a final state; widen the beam";

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) {
              if (a.total != b.total) return a.total < b.total;
              return a.words < b.words;
            });

  NBestList out;
  std::set<std::vector<int>> seen;
  for (const Candidate &c : candidates) {
    if (static_cast<int>(out.hyps.size()) >= options.nbest) break;
    if (!seen.insert(c.words).second) continue;
    out.hyps.push_back({c.words, c.units, c.total, c.acoustic, c.graph});
  }
  return out;
}

double RecomputeAcousticCost(const Hypothesis &hyp,
                             const EmissionSequence &emissions) {
  GEOASR_CHECK(hyp.units.size() == emissions.NumFrames())
      << "hypothesis consumes " << hyp.units.size() << " frames, emission has "
      << emissions.NumFrames();
  double total = 0.0;
  for (size_t t = 0; t < hyp.units.size(); ++t) {
    total += -emissions.frames[t][hyp.units[t]];
  }
  return total;
}

std::string NBestToText(const NBestList &nbest,
                        const wfst::SymbolTable &word_syms) {
  std::ostringstream out;
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return std::string(buf);
  };
  int rank = 1;
  for (const Hypothesis &h : nbest.hyps) {
    std::vector<std::string> words;
    words.reserve(h.words.size());
    for (int w : h.words) words.push_back(word_syms.Symbol(w));
    out << nbest.utt_id << "\t" << rank++ << "\t" << nbest.province_id << "\t"
        << fmt(h.total_cost) << "\t" << fmt(h.acoustic_cost) << "\t"
        << fmt(h.lm_cost) << "\t" << JoinFields(words, " ") << "\n";
  }
  return out.str();
}

std::vector<TextHypothesis> NBestFromText(const std::string &text) {
  std::vector<TextHypothesis> out;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripLineEnding(line);
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    GEOASR_CHECK(fields.size() == 7)
        << "bad n-best line " << line_no << ": " << line;
    TextHypothesis h;
    h.utt_id = fields[0];
    long long rank = 0, province = 0;
    GEOASR_CHECK(ParseInt(fields[1], &rank) && ParseInt(fields[2], &province) &&
                 ParseDouble(fields[3], &h.total_cost) &&
                 ParseDouble(fields[4], &h.acoustic_cost) &&
                 ParseDouble(fields[5], &h.lm_cost))
        << "bad numeric field in n-best line " << line_no;
    h.rank = static_cast<int>(rank);
    h.province_id = static_cast<int>(province);
    h.words = SplitFields(fields[6], " ");
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace decoder
}  // namespace geoasr
