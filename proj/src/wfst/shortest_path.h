// wfst/shortest_path.h
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
// N-best path extraction without determinization: best-first search with an
// exact cost-to-final heuristic and a visited-output-sequence set, so the
// returned sequences are distinct and emitted in nondecreasing cost order.

#ifndef GEOASR_WFST_SHORTEST_PATH_H_
#define GEOASR_WFST_SHORTEST_PATH_H_

#include <vector>

#include "wfst/fst.h"
#include "wfst/lazy.h"

namespace geoasr {
namespace wfst {

struct OutputPath {
  std::vector<int> olabels;  // epsilons removed
  double cost = 0.0;
};

// Up to n distinct output sequences, cheapest first; exact path costs.
// Throws when the machine has no accepting path or the expansion budget is
// exhausted (e.g. zero-cost cycles).
std::vector<OutputPath> ShortestPaths(const Fst &fst, int n,
                                      size_t max_expansions = 10000000);

// Lazy overload: expands the reachable part, then extracts.
std::vector<OutputPath> ShortestPaths(LazyComposition &lazy, int n,
                                      size_t max_expansions = 10000000);

// Exact cost to reach a final state from every state (infinite when none is
// reachable).  Throws on a negative cycle.
std::vector<double> CostToFinal(const Fst &fst);

}  // namespace wfst
}  // namespace geoasr

#endif  // GEOASR_WFST_SHORTEST_PATH_H_
