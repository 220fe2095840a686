// wfst/fst.h
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
// Mutable weighted finite-state transducer over the tropical semiring.
// Label 0 is epsilon on both sides.

#ifndef GEOASR_WFST_FST_H_
#define GEOASR_WFST_FST_H_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "base/error.h"
#include "wfst/weight.h"

namespace geoasr {
namespace wfst {

inline constexpr int kEpsilon = 0;
inline constexpr int kNoState = -1;

struct Arc {
  int ilabel = kEpsilon;
  int olabel = kEpsilon;
  double weight = 0.0;
  int nextstate = kNoState;
};

// Bidirectional symbol <-> dense id map; id 0 is always <eps>.
class SymbolTable {
 public:
  SymbolTable() { AddSymbol("<eps>"); }

  int AddSymbol(std::string_view symbol) {
    auto it = ids_.find(std::string(symbol));
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(symbols_.size());
    symbols_.emplace_back(symbol);
    ids_.emplace(symbols_.back(), id);
    return id;
  }

  int Find(std::string_view symbol) const {
    auto it = ids_.find(std::string(symbol));
    return it == ids_.end() ? -1 : it->second;
  }

  const std::string &Symbol(int id) const {
    GEOASR_CHECK(id >= 0 && id < static_cast<int>(symbols_.size()))
        << "symbol id " << id << " out of range";
    return symbols_[id];
  }

  size_t Size() const { return symbols_.size(); }

  bool ContentEquals(const SymbolTable &other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, int> ids_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

class Fst {
 public:
  int AddState() {
    arcs_.emplace_back();
    finals_.push_back(kInfiniteCost);
    return static_cast<int>(arcs_.size()) - 1;
  }

  int NumStates() const { return static_cast<int>(arcs_.size()); }

  void SetStart(int state) {
    CheckState(state);
    start_ = state;
  }
  int Start() const { return start_; }

  void AddArc(int state, const Arc &arc) {
    CheckState(state);
    CheckState(arc.nextstate);
    arcs_[state].push_back(arc);
  }

  std::span<const Arc> Arcs(int state) const {
    CheckState(state);
    return arcs_[state];
  }

  size_t NumArcs() const {
    size_t n = 0;
    for (const auto &a : arcs_) n += a.size();
    return n;
  }

  void SetFinal(int state, double cost) {
    CheckState(state);
    finals_[state] = cost;
  }

  // Infinite cost means "not final".
  double Final(int state) const {
    CheckState(state);
    return finals_[state];
  }

  bool IsFinal(int state) const { return Final(state) != kInfiniteCost; }

  void SetInputSymbols(SymbolTablePtr syms) { isyms_ = std::move(syms); }
  void SetOutputSymbols(SymbolTablePtr syms) { osyms_ = std::move(syms); }
  const SymbolTablePtr &InputSymbols() const { return isyms_; }
  const SymbolTablePtr &OutputSymbols() const { return osyms_; }

 private:
  void CheckState(int state) const {
    GEOASR_CHECK(state >= 0 && state < NumStates())
        << "state " << state << " out of range";
  }

  std::vector<std::vector<Arc>> arcs_;
  std::vector<double> finals_;
  int start_ = kNoState;
  SymbolTablePtr isyms_;
  SymbolTablePtr osyms_;
};

// Abstract transition view shared by concrete and lazily expanded graphs.
class SearchGraph {
 public:
  virtual ~SearchGraph() = default;
  virtual int Start() = 0;
  virtual std::span<const Arc> Arcs(int state) = 0;
  virtual double Final(int state) = 0;
};

class FstSearchGraph : public SearchGraph {
 public:
  explicit FstSearchGraph(const Fst &fst) : fst_(fst) {}
  int Start() override { return fst_.Start(); }
  std::span<const Arc> Arcs(int state) override { return fst_.Arcs(state); }
  double Final(int state) override { return fst_.Final(state); }

 private:
  const Fst &fst_;
};

}  // namespace wfst
}  // namespace geoasr

#endif  // GEOASR_WFST_FST_H_
