// base/fileio.h
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

#ifndef GEOASR_BASE_FILEIO_H_
#define GEOASR_BASE_FILEIO_H_

#include <fstream>
#include <string>
#include <vector>

#include "base/error.h"
#include "base/stringutil.h"

namespace geoasr {

inline std::vector<std::string> ReadLines(const std::string &path) {
  std::ifstream in(path);
  GEOASR_CHECK(in.good()) << "cannot open " << path;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(StripLineEnding(line));
  return lines;
}

inline void WriteFile(const std::string &path, const std::string &content) {
  std::ofstream out(path);
  GEOASR_CHECK(out.good()) << "cannot write " << path;
  out << content;
  GEOASR_CHECK(out.good()) << "write failed for " << path;
}

inline std::string ReadFile(const std::string &path) {
  std::ifstream in(path);
  GEOASR_CHECK(in.good()) << "cannot open " << path;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace geoasr

#endif  // GEOASR_BASE_FILEIO_H_
