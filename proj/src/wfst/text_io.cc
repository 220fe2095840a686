// wfst/text_io.cc
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

#include "wfst/text_io.h"

#include <cstdio>
#include <sstream>
#include <vector>

#include "base/fileio.h"
#include "base/stringutil.h"

namespace geoasr {
namespace wfst {

namespace {

std::string FormatCost(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string FstToText(const Fst &fst) {
  std::ostringstream out;
  if (fst.Start() == kNoState) return out.str();
  // Start state first, then the rest in numeric order.
  std::vector<int> order;
  order.push_back(fst.Start());
  for (int s = 0; s < fst.NumStates(); ++s) {
    if (s != fst.Start()) order.push_back(s);
  }
  for (int s : order) {
    for (const Arc &arc : fst.Arcs(s)) {
      out << s << "\t" << arc.nextstate << "\t" << arc.ilabel << "\t"
          << arc.olabel << "\t" << FormatCost(arc.weight) << "\n";
    }
    if (fst.IsFinal(s)) {
      out << s << "\t" << FormatCost(fst.Final(s)) << "\n";
    }
  }
  return out.str();
}

Fst FstFromText(const std::string &text) {
  Fst fst;
  std::istringstream in(text);
  std::string line;
  auto ensure_state = [&](long long s) {
    GEOASR_CHECK(s >= 0) << "negative state id in FST text";
    while (fst.NumStates() <= s) fst.AddState();
    return static_cast<int>(s);
  };
  bool have_start = false;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripLineEnding(line);
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    long long src = 0;
    GEOASR_CHECK(ParseInt(fields[0], &src))
        << "bad state id on FST line " << line_no;
    int s = ensure_state(src);
    if (!have_start) {
      fst.SetStart(s);
      have_start = true;
    }
    if (fields.size() == 2) {
      double cost = 0;
      GEOASR_CHECK(ParseDouble(fields[1], &cost))
          << "bad final cost on FST line " << line_no;
      fst.SetFinal(s, cost);
      continue;
    }
    GEOASR_CHECK(fields.size() == 5) << "bad field count on FST line "
                                     << line_no << ": " << line;
    long long dst = 0, ilabel = 0, olabel = 0;
    double cost = 0;
    GEOASR_CHECK(ParseInt(fields[1], &dst) && ParseInt(fields[2], &ilabel) &&
                 ParseInt(fields[3], &olabel) && ParseDouble(fields[4], &cost))
        << "bad arc fields on FST line " << line_no << ": " << line;
    int d = ensure_state(dst);
    fst.AddArc(s, {static_cast<int>(ilabel), static_cast<int>(olabel), cost, d});
  }
  return fst;
}

void WriteFstFile(const Fst &fst, const std::string &path) {
  WriteFile(path, FstToText(fst));
}

Fst ReadFstFile(const std::string &path) { return FstFromText(ReadFile(path)); }

std::string SymbolTableToText(const SymbolTable &table) {
  std::ostringstream out;
  for (size_t id = 0; id < table.Size(); ++id) {
    out << table.Symbol(static_cast<int>(id)) << "\t" << id << "\n";
  }
  return out.str();
}

SymbolTable SymbolTableFromText(const std::string &text) {
  SymbolTable table;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripLineEnding(line);
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    long long id = 0;
    GEOASR_CHECK(fields.size() == 2 && ParseInt(fields[1], &id))
        << "bad symbol table line " << line_no << ": " << line;
    int assigned = table.AddSymbol(fields[0]);
    GEOASR_CHECK(assigned == id)
        << "symbol table ids must be dense and in order; got " << id
        << " for " << fields[0] << " (expected " << assigned << ")";
  }
  return table;
}

void WriteSymbolTableFile(const SymbolTable &table, const std::string &path) {
  WriteFile(path, SymbolTableToText(table));
}

SymbolTablePtr ReadSymbolTableFile(const std::string &path) {
  return std::make_shared<SymbolTable>(SymbolTableFromText(ReadFile(path)));
}

}  // namespace wfst
}  // namespace geoasr
