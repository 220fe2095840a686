// ngram/arpa.h
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
// ARPA text serialization.  Lines are `log10prob<TAB>tokens<TAB>log10bow`,
// the backoff field present on every entry below the top order.  Values are
// printed at fixed precision so write -> read -> write is byte-stable.

#ifndef GEOASR_NGRAM_ARPA_H_
#define GEOASR_NGRAM_ARPA_H_

#include <string>

#include "ngram/model.h"

namespace geoasr {
namespace ngram {

std::string ToArpa(const NGramModel &model);
NGramModel FromArpa(const std::string &text);

void WriteArpaFile(const NGramModel &model, const std::string &path);
NGramModel ReadArpaFile(const std::string &path);

}  // namespace ngram
}  // namespace geoasr

#endif  // GEOASR_NGRAM_ARPA_H_
