// wfst/lazy.cc
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

#include "wfst/lazy.h"

namespace geoasr {
namespace wfst {

LazyComposition::LazyComposition(const Fst &a, const Fst &b) : a_(a), b_(b) {
  CheckComposable(a, b);
  if (a_.Start() != kNoState && b_.Start() != kNoState) {
    start_ = Intern(a_.Start(), b_.Start(), 0);
  }
}

int LazyComposition::Start() { return start_; }

int LazyComposition::Intern(int left, int right, int filter) {
  uint64_t key = (static_cast<uint64_t>(left) << 33) |
                 (static_cast<uint64_t>(right) << 1) |
                 static_cast<uint64_t>(filter);
  auto [it, inserted] = ids_.emplace(key, static_cast<int>(tuples_.size()));
  if (inserted) {
    tuples_.push_back({left, right, filter});
    arcs_.emplace_back();
    expanded_.push_back(false);
  }
  return it->second;
}

void LazyComposition::EnsureExpanded(int state) {
  GEOASR_CHECK(state >= 0 && state < static_cast<int>(tuples_.size()))
      << "lazy composition state " << state << " out of range";
  if (expanded_[state]) return;
  expanded_[state] = true;
  Tuple s = tuples_[state];
  std::vector<Arc> out;
  for (const Arc &la : a_.Arcs(s.left)) {
    if (la.olabel == kEpsilon) {
      if (s.filter == 0) {
        out.push_back(
            {la.ilabel, kEpsilon, la.weight, Intern(la.nextstate, s.right, 0)});
      }
      continue;
    }
    for (const Arc &ra : b_.Arcs(s.right)) {
      if (ra.ilabel != la.olabel) continue;
      out.push_back({la.ilabel, ra.olabel, la.weight + ra.weight,
                     Intern(la.nextstate, ra.nextstate, 0)});
    }
  }
  for (const Arc &ra : b_.Arcs(s.right)) {
    if (ra.ilabel != kEpsilon) continue;
    out.push_back(
        {kEpsilon, ra.olabel, ra.weight, Intern(s.left, ra.nextstate, 1)});
  }
  arcs_[state] = std::move(out);
}

std::span<const Arc> LazyComposition::Arcs(int state) {
  EnsureExpanded(state);
  return arcs_[state];
}

double LazyComposition::Final(int state) {
  GEOASR_CHECK(state >= 0 && state < static_cast<int>(tuples_.size()))
      << "lazy composition state " << state << " out of range";
  double fa = a_.Final(tuples_[state].left);
  double fb = b_.Final(tuples_[state].right);
  if (fa == kInfiniteCost || fb == kInfiniteCost) return kInfiniteCost;
  return fa + fb;
}

Fst LazyComposition::Expand() {
  Fst out;
  out.SetInputSymbols(a_.InputSymbols());
  out.SetOutputSymbols(b_.OutputSymbols());
  if (start_ == kNoState) return out;
  // Arcs() can intern new states, so the loop runs until the frontier
  // settles; ids are dense and stable.
  for (size_t state = 0; state < tuples_.size(); ++state) {
    Arcs(static_cast<int>(state));
  }
  for (size_t state = 0; state < tuples_.size(); ++state) {
    out.AddState();
  }
  out.SetStart(start_);
  for (size_t state = 0; state < tuples_.size(); ++state) {
    for (const Arc &arc : arcs_[state]) {
      out.AddArc(static_cast<int>(state), arc);
    }
    double f = Final(static_cast<int>(state));
    if (f != kInfiniteCost) out.SetFinal(static_cast<int>(state), f);
  }
  return out;
}

Fst ExpandSearchGraph(SearchGraph *graph) {
  Fst out;
  if (graph->Start() == kNoState) return out;
  std::unordered_map<int, int> ids;
  std::vector<int> order;
  auto intern = [&](int state) {
    auto [it, inserted] = ids.emplace(state, out.NumStates());
    if (inserted) {
      out.AddState();
      order.push_back(state);
    }
    return it->second;
  };
  intern(graph->Start());
  out.SetStart(0);
  for (size_t i = 0; i < order.size(); ++i) {
    int state = order[i];
    int id = ids.at(state);
    for (const Arc &arc : graph->Arcs(state)) {
      out.AddArc(id, {arc.ilabel, arc.olabel, arc.weight,
                      intern(arc.nextstate)});
    }
    double f = graph->Final(state);
    if (f != kInfiniteCost) out.SetFinal(id, f);
  }
  return out;
}

}  // namespace wfst
}  // namespace geoasr
