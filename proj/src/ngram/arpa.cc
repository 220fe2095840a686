// ngram/arpa.cc
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

#include "ngram/arpa.h"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "base/fileio.h"
#include "base/stringutil.h"

namespace geoasr {
namespace ngram {

namespace {

std::string FormatLog10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.7f", v);
  return buf;
}

}  // namespace

std::string ToArpa(const NGramModel &model) {
  const Vocabulary &vocab = model.Vocab();
  std::ostringstream out;
  out << "\\data\\\n";
  for (int k = 1; k <= model.Order(); ++k) {
    out << "ngram " << k << "=" << model.NumEntries(k) << "\n";
  }
  for (int k = 1; k <= model.Order(); ++k) {
    out << "\n\\" << k << "-grams:\n";
    // Sort by token strings so the layout does not depend on id assignment.
    std::vector<std::pair<std::vector<std::string>, const NGramEntry *>> lines;
    for (const auto &gram : model.SortedNGrams(k)) {
      std::vector<std::string> words;
      words.reserve(gram.size());
      for (TokenId id : gram) words.push_back(vocab.Symbol(id));
      lines.emplace_back(std::move(words), model.FindEntry(gram));
    }
    std::sort(lines.begin(), lines.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    for (const auto &[words, entry] : lines) {
      out << FormatLog10(entry->log10_prob) << "\t" << JoinFields(words, " ");
      if (k < model.Order()) out << "\t" << FormatLog10(entry->log10_bow);
      out << "\n";
    }
  }
  out << "\n\\end\\\n";
  return out.str();
}

NGramModel FromArpa(const std::string &text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(StripLineEnding(line));
  }
  size_t pos = 0;

  // Header.
  while (pos < lines.size() && lines[pos] != "\\data\\") ++pos;
  GEOASR_CHECK(pos < lines.size()) << "ARPA header \\data\\ not found";
  ++pos;
  std::vector<size_t> declared;
  for (; pos < lines.size(); ++pos) {
    const std::string &line = lines[pos];
    if (line.empty()) continue;
    if (line[0] == '\\') break;
    auto fields = SplitFields(line, " =");
    long long k = 0, n = 0;
    GEOASR_CHECK(fields.size() == 3 && fields[0] == "ngram" &&
                 ParseInt(fields[1], &k) && ParseInt(fields[2], &n) && k >= 1)
        << "malformed ARPA count line: " << line;
    GEOASR_CHECK(static_cast<size_t>(k) == declared.size() + 1)
        << "non-consecutive n-gram order in header: " << line;
    declared.push_back(static_cast<size_t>(n));
  }
  GEOASR_CHECK(!declared.empty()) << "ARPA header declares no n-gram orders";

  int order = static_cast<int>(declared.size());

  // Entries are staged first so the vocabulary can be built before ids are
  // assigned.
  struct StagedEntry {
    std::vector<std::string> words;
    double prob;
    double bow;
  };
  std::vector<std::vector<StagedEntry>> staged(order);

  int current = 0;  // current section order, 0 = between sections
  bool ended = false;
  for (; pos < lines.size(); ++pos) {
    const std::string &line = lines[pos];
    if (line.empty()) continue;
    if (line == "\\end\\") {
      ended = true;
      break;
    }
    if (line[0] == '\\') {
      long long k = 0;
      auto dash = line.find("-grams:");
      GEOASR_CHECK(dash != std::string::npos &&
                   ParseInt(line.substr(1, dash - 1), &k) && k >= 1 &&
                   k <= order)
          << "malformed ARPA section header: " << line;
      current = static_cast<int>(k);
      continue;
    }
    GEOASR_CHECK(current >= 1) << "ARPA entry before any section: " << line;
    auto fields = SplitFields(line, " \t");
    size_t expect_min = 1 + current;  // prob + tokens
    bool has_bow = fields.size() == expect_min + 1;
    GEOASR_CHECK(fields.size() == expect_min || has_bow)
        << "bad field count in ARPA line: " << line;
    StagedEntry e;
    GEOASR_CHECK(ParseDouble(fields[0], &e.prob))
        << "non-numeric probability in ARPA line: " << line;
    e.bow = 0.0;
    if (has_bow) {
      GEOASR_CHECK(ParseDouble(fields.back(), &e.bow))
          << "non-numeric backoff in ARPA line: " << line;
    }
    e.words.assign(fields.begin() + 1, fields.begin() + 1 + current);
    staged[current - 1].push_back(std::move(e));
  }
  GEOASR_CHECK(ended) << "ARPA text not terminated by \\end\\";
  for (int k = 1; k <= order; ++k) {
    GEOASR_CHECK(staged[k - 1].size() == declared[k - 1])
        << "ARPA declares " << declared[k - 1] << " " << k
        << "-grams but body has " << staged[k - 1].size();
  }

  Vocabulary vocab;
  for (int k = 1; k <= order; ++k) {
    for (const auto &e : staged[k - 1]) {
      for (const auto &w : e.words) vocab.AddSymbol(w);
    }
  }
  NGramModel result(order, vocab, std::vector<int>(order, 0));
  for (int k = 1; k <= order; ++k) {
    for (const auto &e : staged[k - 1]) {
      std::vector<TokenId> ids;
      ids.reserve(e.words.size());
      for (const auto &w : e.words) ids.push_back(vocab.Find(w));
      result.SetEntry(ids, e.prob, e.bow);
    }
  }
  return result;
}

void WriteArpaFile(const NGramModel &model, const std::string &path) {
  WriteFile(path, ToArpa(model));
}

NGramModel ReadArpaFile(const std::string &path) {
  return FromArpa(ReadFile(path));
}

}  // namespace ngram
}  // namespace geoasr
