// graph/lexicon.h
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
// Pronunciation lexicon and its transducer: unit sequences in, words out.

#ifndef GEOASR_GRAPH_LEXICON_H_
#define GEOASR_GRAPH_LEXICON_H_

#include <map>
#include <string>
#include <vector>

#include "wfst/fst.h"

namespace geoasr {
namespace graph {

struct Lexicon {
  // word -> one or more unit-sequence pronunciations.
  std::map<std::string, std::vector<std::vector<std::string>>> entries;

  // Words sharing a unit sequence, groups of size >= 2.
  std::vector<std::vector<std::string>> HomophoneGroups() const;
};

// `word<TAB>unit unit unit ...`; multiple lines per word allowed.
Lexicon ParseLexicon(const std::vector<std::string> &lines);
std::string LexiconToText(const Lexicon &lexicon);

// Unit inventory of the lexicon as a symbol table (sorted, after <eps>).
wfst::SymbolTablePtr BuildUnitSymbols(const Lexicon &lexicon);

// <eps>, the reserved LM tokens, lexicon words and extra vocabularies
// (e.g. LM-only words), sorted within each group.
wfst::SymbolTablePtr BuildWordSymbols(
    const Lexicon &lexicon,
    const std::vector<std::vector<std::string>> &extra_vocabularies = {});

// Prefix-sharing transducer: each pronunciation is a unit path from the
// root, the word label rides on the last unit arc, and the path loops back
// to the root.  Homophones become parallel zero-cost word arcs.  The root
// is both start and final.
wfst::Fst BuildLexiconFst(const Lexicon &lexicon,
                          const wfst::SymbolTablePtr &unit_syms,
                          const wfst::SymbolTablePtr &word_syms);

}  // namespace graph
}  // namespace geoasr

#endif  // GEOASR_GRAPH_LEXICON_H_
