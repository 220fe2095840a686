// wfst/shortest_path.cc
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

#include "wfst/shortest_path.h"

#include <algorithm>
#include <queue>
#include <set>

namespace geoasr {
namespace wfst {

std::vector<double> CostToFinal(const Fst &fst) {
  int n = fst.NumStates();
  std::vector<double> dist(n, kInfiniteCost);
  for (int s = 0; s < n; ++s) dist[s] = fst.Final(s);
  // Relax backwards until settled; one extra pass detects negative cycles.
  for (int pass = 0; pass <= n; ++pass) {
    bool changed = false;
    for (int s = 0; s < n; ++s) {
      for (const Arc &arc : fst.Arcs(s)) {
        if (dist[arc.nextstate] == kInfiniteCost) continue;
        double via = arc.weight + dist[arc.nextstate];
        if (via < dist[s] - 1e-15) {
          dist[s] = via;
          changed = true;
        }
      }
    }
    if (!changed) return dist;
    GEOASR_CHECK(pass < n) << "negative cycle in shortest-path computation";
  }
  return dist;
}

std::vector<OutputPath> ShortestPaths(const Fst &fst, int n,
                                      size_t max_expansions) {
  GEOASR_CHECK(n >= 1) << "n must be >= 1, got " << n;
  GEOASR_CHECK(fst.Start() != kNoState) << "no accepting path: empty machine";
  std::vector<double> to_final = CostToFinal(fst);
  GEOASR_CHECK(to_final[fst.Start()] != kInfiniteCost)
      << "no accepting path from the start state";

  struct Node {
    int state;
    double g;           // cost from start
    int parent;         // index into the node arena, -1 at the root
    int olabel;         // label on the arc into this node
    bool complete;      // true once the final weight has been added
  };
  std::vector<Node> arena;
  using QueueEntry = std::pair<double, int>;  // (g + heuristic, node index)
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>>
      queue;

  auto push = [&](int state, double g, int parent, int olabel,
                  bool complete) {
    double h = complete ? 0.0 : to_final[state];
    if (h == kInfiniteCost) return;
    arena.push_back({state, g, parent, olabel, complete});
    queue.emplace(g + h, static_cast<int>(arena.size()) - 1);
  };

  push(fst.Start(), 0.0, -1, kEpsilon, false);

  std::vector<OutputPath> results;
  std::set<std::vector<int>> seen;
  size_t expansions = 0;
  while (!queue.empty() && static_cast<int>(results.size()) < n) {
    auto [f, idx] = queue.top();
    queue.pop();
    GEOASR_CHECK(++expansions <= max_expansions)
        << "path extraction budget exceeded after " << max_expansions
        << " expansions";
    Node node = arena[idx];
    if (node.complete) {
      std::vector<int> olabels;
      for (int i = idx; i != -1; i = arena[i].parent) {
        if (arena[i].olabel != kEpsilon) olabels.push_back(arena[i].olabel);
      }
      std::reverse(olabels.begin(), olabels.end());
      if (seen.insert(olabels).second) {
        results.push_back({std::move(olabels), node.g});
      }
      continue;
    }
    double final_cost = fst.Final(node.state);
    if (final_cost != kInfiniteCost) {
      push(node.state, node.g + final_cost, node.parent, node.olabel, true);
    }
    for (const Arc &arc : fst.Arcs(node.state)) {
      push(arc.nextstate, node.g + arc.weight, idx, arc.olabel, false);
    }
  }
  return results;
}

std::vector<OutputPath> ShortestPaths(LazyComposition &lazy, int n,
                                      size_t max_expansions) {
  Fst expanded = lazy.Expand();
  return ShortestPaths(expanded, n, max_expansions);
}

}  // namespace wfst
}  // namespace geoasr
