// wfst/lazy.h
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
// On-the-fly composition.  States are expanded on first visit and memoized;
// full expansion of the reachable part equals static composition of the
// same operands up to state renumbering.

#ifndef GEOASR_WFST_LAZY_H_
#define GEOASR_WFST_LAZY_H_

#include <unordered_map>
#include <vector>

#include "wfst/compose.h"
#include "wfst/fst.h"

namespace geoasr {
namespace wfst {

class LazyComposition : public SearchGraph {
 public:
  // Both operands must outlive the composition.
  LazyComposition(const Fst &a, const Fst &b);

  int Start() override;
  std::span<const Arc> Arcs(int state) override;
  double Final(int state) override;

  // Number of pair states touched so far; stays below the static state
  // count when traversals only visit a sublanguage.
  size_t NumExpandedStates() const { return tuples_.size(); }

  // Materializes every reachable state.  State ids match the ones handed
  // out lazily, so this is also usable mid-traversal.
  Fst Expand();

 private:
  struct Tuple {
    int left;
    int right;
    int filter;
  };

  int Intern(int left, int right, int filter);
  void EnsureExpanded(int state);

  const Fst &a_;
  const Fst &b_;
  std::unordered_map<uint64_t, int> ids_;
  std::vector<Tuple> tuples_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<bool> expanded_;
  int start_ = kNoState;
};

// Materializes any finite-reachable search graph into a concrete FST by
// breadth-first expansion; state ids follow discovery order.
Fst ExpandSearchGraph(SearchGraph *graph);

}  // namespace wfst
}  // namespace geoasr

#endif  // GEOASR_WFST_LAZY_H_
