// tests/oracles/fst_enum.h
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
// Brute-force path enumeration oracles for transducer tests, plus small
// random machine generators.  Everything here explores paths explicitly and
// never calls the composition or search code under test.

#ifndef GEOASR_TESTS_ORACLES_FST_ENUM_H_
#define GEOASR_TESTS_ORACLES_FST_ENUM_H_

#include <map>
#include <utility>
#include <vector>

#include "base/rng.h"
#include "wfst/fst.h"

namespace geoasr {
namespace testing {

using LabelSeq = std::vector<int>;
// (input string, output string) -> min cost over all accepting paths.
using Relation = std::map<std::pair<LabelSeq, LabelSeq>, double>;

// Enumerates every accepting path with at most max_arcs arcs.
inline Relation EnumerateRelation(const wfst::Fst &fst, int max_arcs) {
  Relation rel;
  if (fst.Start() == wfst::kNoState) return rel;
  struct Frame {
    int state;
    int arcs_used;
    double cost;
    LabelSeq in, out;
  };
  std::vector<Frame> stack{{fst.Start(), 0, 0.0, {}, {}}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (fst.IsFinal(f.state)) {
      double total = f.cost + fst.Final(f.state);
      auto key = std::make_pair(f.in, f.out);
      auto it = rel.find(key);
      if (it == rel.end() || total < it->second) rel[key] = total;
    }
    if (f.arcs_used == max_arcs) continue;
    for (const wfst::Arc &arc : fst.Arcs(f.state)) {
      Frame next = f;
      next.state = arc.nextstate;
      next.arcs_used++;
      next.cost += arc.weight;
      if (arc.ilabel != wfst::kEpsilon) next.in.push_back(arc.ilabel);
      if (arc.olabel != wfst::kEpsilon) next.out.push_back(arc.olabel);
      stack.push_back(std::move(next));
    }
  }
  return rel;
}

// Brute-force composition: all compatible path pairs, min total cost.
inline Relation ComposeRelations(const Relation &a, const Relation &b) {
  Relation out;
  for (const auto &[ka, ca] : a) {
    for (const auto &[kb, cb] : b) {
      if (ka.second != kb.first) continue;
      auto key = std::make_pair(ka.first, kb.second);
      double cost = ca + cb;
      auto it = out.find(key);
      if (it == out.end() || cost < it->second) out[key] = cost;
    }
  }
  return out;
}

// Random acyclic transducer: arcs only go from lower to higher state ids,
// so path enumeration is exact.
inline wfst::Fst RandomAcyclicFst(Rng *rng, int num_states, int num_arcs,
                                  int num_ilabels, int num_olabels,
                                  double eps_prob = 0.25) {
  wfst::Fst fst;
  for (int s = 0; s < num_states; ++s) fst.AddState();
  fst.SetStart(0);
  fst.SetFinal(num_states - 1, rng->NextDouble());
  if (rng->NextDouble() < 0.3 && num_states > 2) {
    fst.SetFinal(num_states - 2, rng->NextDouble());
  }
  for (int i = 0; i < num_arcs; ++i) {
    int src = static_cast<int>(rng->NextIndex(num_states - 1));
    int dst = src + 1 + static_cast<int>(rng->NextIndex(num_states - src - 1));
    int ilabel = rng->NextDouble() < eps_prob
                     ? 0
                     : 1 + static_cast<int>(rng->NextIndex(num_ilabels));
    int olabel = rng->NextDouble() < eps_prob
                     ? 0
                     : 1 + static_cast<int>(rng->NextIndex(num_olabels));
    double weight = 0.1 + rng->NextDouble() * 2.0;
    fst.AddArc(src, {ilabel, olabel, weight, dst});
  }
  return fst;
}

// Isomorphism of reachable parts via breadth-first signature matching.
// Requires deterministic arc signatures (no duplicate (ilabel, olabel,
// weight) triples out of one state), which random real weights give.
inline bool IsomorphicFsts(const wfst::Fst &a, const wfst::Fst &b) {
  if ((a.Start() == wfst::kNoState) != (b.Start() == wfst::kNoState)) {
    return false;
  }
  if (a.Start() == wfst::kNoState) return true;
  std::map<int, int> a2b{{a.Start(), b.Start()}};
  std::vector<int> frontier{a.Start()};
  auto signature = [](const wfst::Arc &arc) {
    return std::make_tuple(arc.ilabel, arc.olabel, arc.weight);
  };
  while (!frontier.empty()) {
    int sa = frontier.back();
    frontier.pop_back();
    int sb = a2b.at(sa);
    auto arcs_a = a.Arcs(sa);
    auto arcs_b = b.Arcs(sb);
    if (arcs_a.size() != arcs_b.size()) return false;
    if (a.Final(sa) != b.Final(sb)) return false;
    std::vector<wfst::Arc> sa_arcs(arcs_a.begin(), arcs_a.end());
    std::vector<wfst::Arc> sb_arcs(arcs_b.begin(), arcs_b.end());
    auto cmp = [&](const wfst::Arc &x, const wfst::Arc &y) {
      return signature(x) < signature(y);
    };
    std::sort(sa_arcs.begin(), sa_arcs.end(), cmp);
    std::sort(sb_arcs.begin(), sb_arcs.end(), cmp);
    for (size_t i = 0; i < sa_arcs.size(); ++i) {
      if (signature(sa_arcs[i]) != signature(sb_arcs[i])) return false;
      auto [it, inserted] =
          a2b.emplace(sa_arcs[i].nextstate, sb_arcs[i].nextstate);
      if (inserted) {
        frontier.push_back(sa_arcs[i].nextstate);
      } else if (it->second != sb_arcs[i].nextstate) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace testing
}  // namespace geoasr

#endif  // GEOASR_TESTS_ORACLES_FST_ENUM_H_
