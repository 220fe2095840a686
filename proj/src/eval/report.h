// eval/report.h
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
// Grouped CER accounting and report rendering.

#ifndef GEOASR_EVAL_REPORT_H_
#define GEOASR_EVAL_REPORT_H_

#include <map>
#include <string>
#include <vector>

#include "eval/cer.h"

namespace geoasr {
namespace eval {

class CerReport {
 public:
  void Add(const std::string &group,
           std::span<const std::string> reference,
           std::span<const std::string> hypothesis);

  const std::map<std::string, EditCounts> &Groups() const { return groups_; }
  const EditCounts &Overall() const { return overall_; }
  int64_t Utterances(const std::string &group) const;

  // TSV table `group N S D I CER [CERR]`, ending with an `overall` row; the
  // CERR column appears when a baseline report is given and compares group
  // by group.
  std::string ToTsv(const CerReport *baseline = nullptr,
                    const std::string &baseline_name = "baseline") const;
  // Human-readable rendering of the same numbers.
  std::string ToText(const CerReport *baseline = nullptr,
                     const std::string &baseline_name = "baseline") const;

 private:
  std::map<std::string, EditCounts> groups_;
  std::map<std::string, int64_t> utterances_;
  EditCounts overall_;
};

}  // namespace eval
}  // namespace geoasr

#endif  // GEOASR_EVAL_REPORT_H_
