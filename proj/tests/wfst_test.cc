// tests/wfst_test.cc
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

#include <cmath>
#include <set>

#include "doctest.h"

#include "base/rng.h"
#include "oracles/fst_enum.h"
#include "wfst/compose.h"
#include "wfst/lazy.h"
#include "wfst/shortest_path.h"
#include "wfst/text_io.h"
#include "wfst/weight.h"

namespace geoasr {
namespace wfst {
namespace {

TEST_CASE("semiring laws hold on random finite weights") {
  Rng rng(1234);
  auto random_weight = [&]() -> Weight {
    if (rng.NextDouble() < 0.1) return Weight::Zero();
    return {rng.NextDouble() * 10 - 5};
  };
  for (int trial = 0; trial < 500; ++trial) {
    Weight a = random_weight(), b = random_weight(), c = random_weight();
    CHECK(Plus(a, Plus(b, c)) == Plus(Plus(a, b), c));
    // Cost addition is associative up to rounding.
    Weight t1 = Times(a, Times(b, c));
    Weight t2 = Times(Times(a, b), c);
    if (t1.IsZero() || t2.IsZero()) {
      CHECK(t1 == t2);
    } else {
      CHECK(t1.cost == doctest::Approx(t2.cost).epsilon(1e-12));
    }
    CHECK(Plus(a, b) == Plus(b, a));
    CHECK(Plus(a, Weight::Zero()) == a);
    CHECK(Times(a, Weight::One()) == a);
    CHECK(Times(a, Weight::Zero()) == Weight::Zero());
    // Distributivity.
    CHECK(Times(a, Plus(b, c)) == Plus(Times(a, b), Times(a, c)));
  }
}

TEST_CASE("composition with an identity acceptor preserves the language") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Fst a = testing::RandomAcyclicFst(&rng, 5, 8, 3, 3);
    // Identity acceptor over a's output alphabet: one state, self loops.
    Fst id;
    int s = id.AddState();
    id.SetStart(s);
    id.SetFinal(s, 0.0);
    for (int label = 1; label <= 3; ++label) {
      id.AddArc(s, {label, label, 0.0, s});
    }
    Fst composed = ComposeStatic(a, id);
    auto want = testing::EnumerateRelation(a, 10);
    auto got = testing::EnumerateRelation(composed, 20);
    REQUIRE(got.size() == want.size());
    for (const auto &[key, cost] : want) {
      REQUIRE(got.count(key) == 1);
      CHECK(got.at(key) == doctest::Approx(cost).epsilon(1e-12));
    }
  }
}

TEST_CASE("static composition matches brute-force path-pair enumeration") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    Fst a = testing::RandomAcyclicFst(&rng, 3 + rng.NextIndex(3), 6, 3, 3);
    Fst b = testing::RandomAcyclicFst(&rng, 3 + rng.NextIndex(3), 6, 3, 3);
    Fst composed = ComposeStatic(a, b);
    auto rel_a = testing::EnumerateRelation(a, 8);
    auto rel_b = testing::EnumerateRelation(b, 8);
    auto want = testing::ComposeRelations(rel_a, rel_b);
    auto got = testing::EnumerateRelation(composed, 16);
    REQUIRE(got.size() == want.size());
    for (const auto &[key, cost] : want) {
      REQUIRE(got.count(key) == 1);
      CHECK(got.at(key) == doctest::Approx(cost).epsilon(1e-12));
    }
  }
}

TEST_CASE("composition with an empty transducer is empty") {
  Rng rng(3);
  Fst a = testing::RandomAcyclicFst(&rng, 4, 6, 3, 3);
  Fst empty;
  Fst composed = ComposeStatic(a, empty);
  CHECK(composed.Start() == kNoState);
  CHECK(testing::EnumerateRelation(composed, 10).empty());
}

TEST_CASE("composition rejects mismatched symbol tables") {
  auto t1 = std::make_shared<SymbolTable>();
  auto t2 = std::make_shared<SymbolTable>();
  const_cast<SymbolTable &>(*t1).AddSymbol("x");
  const_cast<SymbolTable &>(*t2).AddSymbol("y");
  Fst a, b;
  a.AddState();
  a.SetStart(0);
  b.AddState();
  b.SetStart(0);
  a.SetOutputSymbols(t1);
  b.SetInputSymbols(t2);
  CHECK_THROWS(ComposeStatic(a, b));
}

TEST_CASE("full lazy expansion is isomorphic to static composition") {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    Fst a = testing::RandomAcyclicFst(&rng, 4 + rng.NextIndex(4), 8, 3, 3);
    Fst b = testing::RandomAcyclicFst(&rng, 4 + rng.NextIndex(4), 8, 3, 3);
    Fst stat = ComposeStatic(a, b);
    LazyComposition lazy(a, b);
    Fst expanded = lazy.Expand();
    CHECK(expanded.NumStates() == stat.NumStates());
    CHECK(testing::IsomorphicFsts(stat, expanded));
  }
}

TEST_CASE("lazy expansion touches only visited states") {
  // Left: two branches from the start; right: identity.  Walking only one
  // branch must not expand the other.
  Fst a;
  for (int i = 0; i < 7; ++i) a.AddState();
  a.SetStart(0);
  a.AddArc(0, {1, 1, 0.5, 1});
  a.AddArc(0, {2, 2, 0.5, 4});
  a.AddArc(1, {1, 1, 0.5, 2});
  a.AddArc(2, {1, 1, 0.5, 3});
  a.AddArc(4, {2, 2, 0.5, 5});
  a.AddArc(5, {2, 2, 0.5, 6});
  a.SetFinal(3, 0.0);
  a.SetFinal(6, 0.0);
  Fst id;
  int s = id.AddState();
  id.SetStart(s);
  id.SetFinal(s, 0.0);
  id.AddArc(s, {1, 1, 0.0, s});
  id.AddArc(s, {2, 2, 0.0, s});

  LazyComposition lazy(a, id);
  Fst full = ComposeStatic(a, id);
  // Follow only the label-1 branch.
  int state = lazy.Start();
  for (int step = 0; step < 3; ++step) {
    auto arcs = lazy.Arcs(state);
    int next = kNoState;
    for (const Arc &arc : arcs) {
      if (arc.ilabel == 1) next = arc.nextstate;
    }
    if (next == kNoState) break;
    state = next;
  }
  CHECK(lazy.NumExpandedStates() < static_cast<size_t>(full.NumStates()));
}

TEST_CASE("negate_weights is an involution and flips costs") {
  Rng rng(5);
  Fst a = testing::RandomAcyclicFst(&rng, 5, 9, 3, 3);
  Fst once = NegateWeights(a);
  Fst twice = NegateWeights(once);
  REQUIRE(twice.NumStates() == a.NumStates());
  for (int s = 0; s < a.NumStates(); ++s) {
    auto orig = a.Arcs(s);
    auto back = twice.Arcs(s);
    REQUIRE(orig.size() == back.size());
    for (size_t i = 0; i < orig.size(); ++i) {
      CHECK(orig[i].ilabel == back[i].ilabel);
      CHECK(orig[i].olabel == back[i].olabel);
      CHECK(orig[i].nextstate == back[i].nextstate);
      CHECK(orig[i].weight == back[i].weight);
    }
    CHECK(a.Final(s) == twice.Final(s));
  }

  Fst single;
  single.AddState();
  single.AddState();
  single.SetStart(0);
  single.SetFinal(1, 0.0);
  single.AddArc(0, {1, 1, 2.5, 1});
  Fst negated = NegateWeights(single);
  CHECK(negated.Arcs(0)[0].weight == -2.5);
}

TEST_CASE("shortest path on a chain returns its only path") {
  Fst chain;
  for (int i = 0; i < 4; ++i) chain.AddState();
  chain.SetStart(0);
  chain.AddArc(0, {1, 5, 0.5, 1});
  chain.AddArc(1, {2, 6, 0.25, 2});
  chain.AddArc(2, {3, 7, 0.25, 3});
  chain.SetFinal(3, 1.0);
  auto paths = ShortestPaths(chain, 1);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].olabels == std::vector<int>{5, 6, 7});
  CHECK(paths[0].cost == doctest::Approx(2.0));
}

TEST_CASE("n-best matches exhaustive enumeration on a diamond graph") {
  // Two interior branches in sequence: four distinct outputs.
  Fst d;
  for (int i = 0; i < 4; ++i) d.AddState();
  d.SetStart(0);
  d.AddArc(0, {1, 1, 0.1, 1});
  d.AddArc(0, {1, 2, 0.7, 1});
  d.AddArc(1, {1, 3, 0.3, 2});
  d.AddArc(1, {1, 4, 0.2, 2});
  d.AddArc(2, {1, 5, 0.05, 3});
  d.SetFinal(3, 0.0);

  auto rel = testing::EnumerateRelation(d, 10);
  std::vector<std::pair<double, std::vector<int>>> want;
  for (const auto &[key, cost] : rel) want.emplace_back(cost, key.second);
  std::sort(want.begin(), want.end());

  auto got = ShortestPaths(d, 5);
  REQUIRE(got.size() == want.size());
  for (size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].cost == doctest::Approx(want[i].first).epsilon(1e-12));
    CHECK(got[i].olabels == want[i].second);
  }
}

TEST_CASE("n-best saturates without duplicates") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Fst a = testing::RandomAcyclicFst(&rng, 6, 12, 2, 2, 0.1);
    auto rel = testing::EnumerateRelation(a, 12);
    std::set<std::vector<int>> distinct;
    for (const auto &[key, cost] : rel) distinct.insert(key.second);
    if (distinct.empty()) continue;
    auto got = ShortestPaths(a, 1000);
    CHECK(got.size() == distinct.size());
    std::set<std::vector<int>> seen;
    double prev = -1e300;
    for (const auto &p : got) {
      CHECK(p.cost >= prev - 1e-12);
      prev = p.cost;
      CHECK(seen.insert(p.olabels).second);
      // Cost is the exact min over paths with this output.
      double best = kInfiniteCost;
      for (const auto &[key, cost] : rel) {
        if (key.second == p.olabels) best = std::min(best, cost);
      }
      CHECK(p.cost == doctest::Approx(best).epsilon(1e-12));
    }
  }
}

TEST_CASE("shortest path demands an accepting path") {
  Fst no_final;
  no_final.AddState();
  no_final.AddState();
  no_final.SetStart(0);
  no_final.AddArc(0, {1, 1, 1.0, 1});
  CHECK_THROWS(ShortestPaths(no_final, 1));
}

TEST_CASE("FST text round-trip preserves structure") {
  Rng rng(13);
  Fst a = testing::RandomAcyclicFst(&rng, 6, 10, 3, 3);
  Fst b = FstFromText(FstToText(a));
  CHECK(b.Start() == a.Start());
  auto ra = testing::EnumerateRelation(a, 10);
  auto rb = testing::EnumerateRelation(b, 10);
  REQUIRE(ra.size() == rb.size());
  for (const auto &[key, cost] : ra) {
    CHECK(rb.at(key) == doctest::Approx(cost).epsilon(1e-9));
  }
}

TEST_CASE("symbol table text round-trip") {
  SymbolTable t;
  t.AddSymbol("foo");
  t.AddSymbol("bar");
  SymbolTable u = SymbolTableFromText(SymbolTableToText(t));
  CHECK(u.ContentEquals(t));
  CHECK(u.Find("bar") == 2);
  CHECK(u.Symbol(0) == "<eps>");
}

}  // namespace
}  // namespace wfst
}  // namespace geoasr
