// eval/cer.h
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
// Character error rate: minimal edit distance at token level with a
// deterministic alignment (substitution preferred over a deletion plus
// insertion pair).  One token per Unicode scalar value when splitting raw
// text via Utf8Characters.

#ifndef GEOASR_EVAL_CER_H_
#define GEOASR_EVAL_CER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace geoasr {
namespace eval {

struct EditCounts {
  int64_t substitutions = 0;
  int64_t deletions = 0;
  int64_t insertions = 0;
  int64_t reference_length = 0;

  int64_t Errors() const { return substitutions + deletions + insertions; }
  double Cer() const {
    return reference_length == 0
               ? 0.0
               : static_cast<double>(Errors()) / reference_length;
  }

  EditCounts &operator+=(const EditCounts &o) {
    substitutions += o.substitutions;
    deletions += o.deletions;
    insertions += o.insertions;
    reference_length += o.reference_length;
    return *this;
  }
};

enum class EditOp { kMatch, kSubstitute, kDelete, kInsert };

// Throws on an empty reference.
EditCounts Cer(std::span<const std::string> reference,
               std::span<const std::string> hypothesis);

// Full alignment; ops apply reference -> hypothesis left to right.
std::vector<EditOp> Align(std::span<const std::string> reference,
                          std::span<const std::string> hypothesis);

// 100 * (baseline - system) / baseline; throws on baseline <= 0.
double RelativeReduction(double baseline_cer, double system_cer);

}  // namespace eval
}  // namespace geoasr

#endif  // GEOASR_EVAL_CER_H_
