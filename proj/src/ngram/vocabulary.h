// ngram/vocabulary.h
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

#ifndef GEOASR_NGRAM_VOCABULARY_H_
#define GEOASR_NGRAM_VOCABULARY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "base/error.h"

namespace geoasr {
namespace ngram {

using TokenId = int32_t;

// Dense token <-> id map with the three reserved symbols always present.
class Vocabulary {
 public:
  static constexpr TokenId kBos = 0;  // <s>
  static constexpr TokenId kEos = 1;  // </s>
  static constexpr TokenId kUnk = 2;  // <unk>

  static constexpr const char *kBosSymbol = "<s>";
  static constexpr const char *kEosSymbol = "</s>";
  static constexpr const char *kUnkSymbol = "<unk>";

  Vocabulary() {
    AddSymbol(kBosSymbol);
    AddSymbol(kEosSymbol);
    AddSymbol(kUnkSymbol);
  }

  TokenId AddSymbol(std::string_view symbol) {
    auto it = ids_.find(std::string(symbol));
    if (it != ids_.end()) return it->second;
    TokenId id = static_cast<TokenId>(symbols_.size());
    symbols_.emplace_back(symbol);
    ids_.emplace(symbols_.back(), id);
    return id;
  }

  // Returns -1 when the symbol is absent.
  TokenId Find(std::string_view symbol) const {
    auto it = ids_.find(std::string(symbol));
    return it == ids_.end() ? -1 : it->second;
  }

  TokenId IdOrUnk(std::string_view symbol) const {
    TokenId id = Find(symbol);
    return id < 0 ? kUnk : id;
  }

  const std::string &Symbol(TokenId id) const {
    GEOASR_CHECK(id >= 0 && id < static_cast<TokenId>(symbols_.size()))
        << "token id " << id << " out of range";
    return symbols_[id];
  }

  size_t Size() const { return symbols_.size(); }

  bool IsReserved(TokenId id) const { return id >= 0 && id <= kUnk; }

  const std::vector<std::string> &Symbols() const { return symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, TokenId> ids_;
};

}  // namespace ngram
}  // namespace geoasr

#endif  // GEOASR_NGRAM_VOCABULARY_H_
