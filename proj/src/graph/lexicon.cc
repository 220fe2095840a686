// graph/lexicon.cc
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

#include "graph/lexicon.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "base/error.h"
#include "base/stringutil.h"
#include "ngram/vocabulary.h"

namespace geoasr {
namespace graph {

std::vector<std::vector<std::string>> Lexicon::HomophoneGroups() const {
  std::map<std::vector<std::string>, std::vector<std::string>> by_units;
  for (const auto &[word, prons] : entries) {
    for (const auto &units : prons) {
      by_units[units].push_back(word);
    }
  }
  std::vector<std::vector<std::string>> groups;
  for (auto &[units, words] : by_units) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.size() >= 2) groups.push_back(words);
  }
  return groups;
}

Lexicon ParseLexicon(const std::vector<std::string> &lines) {
  Lexicon lexicon;
  size_t line_no = 0;
  for (const auto &raw : lines) {
    ++line_no;
    std::string line = StripLineEnding(raw);
    if (line.empty()) continue;
    auto tab = line.find('\t');
    GEOASR_CHECK(tab != std::string::npos)
        << "lexicon line " << line_no << " has no tab: " << line;
    std::string word = line.substr(0, tab);
    auto units = SplitFields(line.substr(tab + 1), " \t");
    GEOASR_CHECK(!word.empty() && !units.empty())
        << "lexicon line " << line_no << " has an empty word or pronunciation";
    lexicon.entries[word].push_back(std::move(units));
  }
  return lexicon;
}

std::string LexiconToText(const Lexicon &lexicon) {
  std::ostringstream out;
  for (const auto &[word, prons] : lexicon.entries) {
    for (const auto &units : prons) {
      out << word << "\t" << JoinFields(units, " ") << "\n";
    }
  }
  return out.str();
}

wfst::SymbolTablePtr BuildUnitSymbols(const Lexicon &lexicon) {
  std::set<std::string> units;
  for (const auto &[word, prons] : lexicon.entries) {
    for (const auto &pron : prons) {
      units.insert(pron.begin(), pron.end());
    }
  }
  auto table = std::make_shared<wfst::SymbolTable>();
  for (const auto &u : units) table->AddSymbol(u);
  return table;
}

wfst::SymbolTablePtr BuildWordSymbols(
    const Lexicon &lexicon,
    const std::vector<std::vector<std::string>> &extra_vocabularies) {
  auto table = std::make_shared<wfst::SymbolTable>();
  table->AddSymbol(ngram::Vocabulary::kBosSymbol);
  table->AddSymbol(ngram::Vocabulary::kEosSymbol);
  table->AddSymbol(ngram::Vocabulary::kUnkSymbol);
  std::set<std::string> words;
  for (const auto &[word, prons] : lexicon.entries) words.insert(word);
  for (const auto &vocab : extra_vocabularies) {
    words.insert(vocab.begin(), vocab.end());
  }
  for (const auto &w : words) table->AddSymbol(w);
  return table;
}

wfst::Fst BuildLexiconFst(const Lexicon &lexicon,
                          const wfst::SymbolTablePtr &unit_syms,
                          const wfst::SymbolTablePtr &word_syms) {
  GEOASR_CHECK(!lexicon.entries.empty()) << "empty lexicon";
  wfst::Fst fst;
  fst.SetInputSymbols(unit_syms);
  fst.SetOutputSymbols(word_syms);
  int root = fst.AddState();
  fst.SetStart(root);
  fst.SetFinal(root, 0.0);

  // Interior trie nodes keyed by unit-id prefix.
  std::map<std::vector<int>, int> nodes;
  for (const auto &[word, prons] : lexicon.entries) {
    int word_id = word_syms->Find(word);
    GEOASR_CHECK(word_id > 0) << "word missing from symbol table: " << word;
    for (const auto &pron : prons) {
      GEOASR_CHECK(!pron.empty()) << "word with empty pronunciation: " << word;
      std::vector<int> units;
      units.reserve(pron.size());
      for (const auto &u : pron) {
        int id = unit_syms->Find(u);
        GEOASR_CHECK(id > 0) << "unit missing from symbol table: " << u;
        units.push_back(id);
      }
      int state = root;
      std::vector<int> prefix;
      for (size_t i = 0; i + 1 < units.size(); ++i) {
        prefix.push_back(units[i]);
        auto [it, inserted] = nodes.emplace(prefix, -1);
        if (inserted) {
          it->second = fst.AddState();
          fst.AddArc(state, {units[i], wfst::kEpsilon, 0.0, it->second});
        }
        state = it->second;
      }
      fst.AddArc(state, {units.back(), word_id, 0.0, root});
    }
  }
  return fst;
}

}  // namespace graph
}  // namespace geoasr
