// wfst/text_io.h
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
// Text formats: one arc per line `src<TAB>dst<TAB>ilabel<TAB>olabel<TAB>cost`,
// final lines `state<TAB>cost`; symbol tables as `symbol<TAB>id`.  The first
// arc or final line names the start state.

#ifndef GEOASR_WFST_TEXT_IO_H_
#define GEOASR_WFST_TEXT_IO_H_

#include <string>

#include "wfst/fst.h"

namespace geoasr {
namespace wfst {

std::string FstToText(const Fst &fst);
Fst FstFromText(const std::string &text);

void WriteFstFile(const Fst &fst, const std::string &path);
Fst ReadFstFile(const std::string &path);

std::string SymbolTableToText(const SymbolTable &table);
SymbolTable SymbolTableFromText(const std::string &text);

void WriteSymbolTableFile(const SymbolTable &table, const std::string &path);
SymbolTablePtr ReadSymbolTableFile(const std::string &path);

}  // namespace wfst
}  // namespace geoasr

#endif  // GEOASR_WFST_TEXT_IO_H_
