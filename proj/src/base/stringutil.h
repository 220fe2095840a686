// base/stringutil.h
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

#ifndef GEOASR_BASE_STRINGUTIL_H_
#define GEOASR_BASE_STRINGUTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace geoasr {

// Splits on any run of the given separator characters; no empty fields.
std::vector<std::string> SplitFields(std::string_view line,
                                     std::string_view seps = " \t");

// Splits on single tab characters, keeping empty fields.
std::vector<std::string> SplitTabs(std::string_view line);

std::string JoinFields(const std::vector<std::string> &fields,
                       std::string_view sep = " ");

std::string StripLineEnding(std::string line);

// One element per Unicode scalar value; invalid bytes become single-byte
// elements.
std::vector<std::string> Utf8Characters(std::string_view text);

bool ParseDouble(std::string_view s, double *out);
bool ParseInt(std::string_view s, long long *out);

}  // namespace geoasr

#endif  // GEOASR_BASE_STRINGUTIL_H_
