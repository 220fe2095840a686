// wfst/compose.cc
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

#include "wfst/compose.h"

#include <deque>
#include <tuple>
#include <unordered_map>

namespace geoasr {
namespace wfst {

namespace {

struct PairState {
  int left;
  int right;
  int filter;  // 0: left epsilons allowed; 1: blocked until a match

  bool operator==(const PairState &o) const {
    return left == o.left && right == o.right && filter == o.filter;
  }
};

struct PairStateHash {
  size_t operator()(const PairState &s) const {
    size_t h = static_cast<size_t>(s.left);
    h = h * 0x9E3779B97F4A7C15ULL + static_cast<size_t>(s.right);
    h = h * 0x9E3779B97F4A7C15ULL + static_cast<size_t>(s.filter);
    return h;
  }
};

}  // namespace

void CheckComposable(const Fst &a, const Fst &b) {
  const SymbolTablePtr &out = a.OutputSymbols();
  const SymbolTablePtr &in = b.InputSymbols();
  if (!out || !in) return;  // untabled FSTs compose by raw label
  GEOASR_CHECK(out == in || out->ContentEquals(*in))
      << "symbol-table mismatch between composition operands";
}

Fst ComposeStatic(const Fst &a, const Fst &b) {
  CheckComposable(a, b);
  Fst out;
  out.SetInputSymbols(a.InputSymbols());
  out.SetOutputSymbols(b.OutputSymbols());
  if (a.Start() == kNoState || b.Start() == kNoState) return out;

  std::unordered_map<PairState, int, PairStateHash> ids;
  std::deque<PairState> queue;
  auto intern = [&](const PairState &s) {
    auto [it, inserted] = ids.emplace(s, out.NumStates());
    if (inserted) {
      out.AddState();
      queue.push_back(s);
    }
    return it->second;
  };

  int start = intern({a.Start(), b.Start(), 0});
  out.SetStart(start);

  while (!queue.empty()) {
    PairState s = queue.front();
    queue.pop_front();
    int id = ids.at(s);

    for (const Arc &la : a.Arcs(s.left)) {
      if (la.olabel == kEpsilon) {
        if (s.filter == 0) {
          int next = intern({la.nextstate, s.right, 0});
          out.AddArc(id, {la.ilabel, kEpsilon, la.weight, next});
        }
        continue;
      }
      for (const Arc &ra : b.Arcs(s.right)) {
        if (ra.ilabel != la.olabel) continue;
        int next = intern({la.nextstate, ra.nextstate, 0});
        out.AddArc(id, {la.ilabel, ra.olabel, la.weight + ra.weight, next});
      }
    }
    for (const Arc &ra : b.Arcs(s.right)) {
      if (ra.ilabel != kEpsilon) continue;
      int next = intern({s.left, ra.nextstate, 1});
      out.AddArc(id, {kEpsilon, ra.olabel, ra.weight, next});
    }

    double fa = a.Final(s.left);
    double fb = b.Final(s.right);
    if (fa != kInfiniteCost && fb != kInfiniteCost) {
      out.SetFinal(id, fa + fb);
    }
  }
  return out;
}

Fst NegateWeights(const Fst &a) {
  Fst out;
  out.SetInputSymbols(a.InputSymbols());
  out.SetOutputSymbols(a.OutputSymbols());
  for (int s = 0; s < a.NumStates(); ++s) out.AddState();
  if (a.Start() != kNoState) out.SetStart(a.Start());
  for (int s = 0; s < a.NumStates(); ++s) {
    for (const Arc &arc : a.Arcs(s)) {
      GEOASR_CHECK(arc.weight != kInfiniteCost && arc.weight != -kInfiniteCost)
          << "cannot negate infinite-cost arc from state " << s;
      out.AddArc(s, {arc.ilabel, arc.olabel, -arc.weight, arc.nextstate});
    }
    double f = a.Final(s);
    if (f != kInfiniteCost) out.SetFinal(s, -f);
  }
  return out;
}

}  // namespace wfst
}  // namespace geoasr
