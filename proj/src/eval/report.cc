// eval/report.cc
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

#include "eval/report.h"

#include <cstdio>
#include <sstream>

namespace geoasr {
namespace eval {

void CerReport::Add(const std::string &group,
                    std::span<const std::string> reference,
                    std::span<const std::string> hypothesis) {
  EditCounts counts = Cer(reference, hypothesis);
  groups_[group] += counts;
  utterances_[group] += 1;
  overall_ += counts;
}

int64_t CerReport::Utterances(const std::string &group) const {
  auto it = utterances_.find(group);
  return it == utterances_.end() ? 0 : it->second;
}

namespace {

std::string Pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * v);
  return buf;
}

void RenderRow(std::ostringstream &out, const std::string &group,
               const EditCounts &counts, const EditCounts *baseline,
               const char *sep) {
  out << group << sep << counts.reference_length << sep
      << counts.substitutions << sep << counts.deletions << sep
      << counts.insertions << sep << Pct(counts.Cer());
  if (baseline != nullptr) {
    out << sep;
    if (baseline->Cer() > 0) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.1f",
                    RelativeReduction(baseline->Cer(), counts.Cer()));
      out << buf;
    } else {
      out << "-";
    }
  }
  out << "\n";
}

}  // namespace

std::string CerReport::ToTsv(const CerReport *baseline,
                             const std::string &baseline_name) const {
  std::ostringstream out;
  out << "group\tN\tS\tD\tI\tCER";
  if (baseline != nullptr) out << "\tCERR_vs_" << baseline_name;
  out << "\n";
  for (const auto &[group, counts] : groups_) {
    const EditCounts *base = nullptr;
    if (baseline != nullptr) {
      auto it = baseline->groups_.find(group);
      if (it != baseline->groups_.end()) base = &it->second;
    }
    RenderRow(out, group, counts, base, "\t");
  }
  RenderRow(out, "overall", overall_,
            baseline != nullptr ? &baseline->overall_ : nullptr, "\t");
  return out.str();
}

std::string CerReport::ToText(const CerReport *baseline,
                              const std::string &baseline_name) const {
  std::ostringstream out;
  out << "CER report (" << groups_.size() << " groups)\n";
  out << "  group: N S D I CER%";
  if (baseline != nullptr) out << " CERR% vs " << baseline_name;
  out << "\n";
  for (const auto &[group, counts] : groups_) {
    const EditCounts *base = nullptr;
    if (baseline != nullptr) {
      auto it = baseline->groups_.find(group);
      if (it != baseline->groups_.end()) base = &it->second;
    }
    out << "  ";
    RenderRow(out, group, counts, base, " ");
  }
  out << "  ";
  RenderRow(out, "overall", overall_,
            baseline != nullptr ? &baseline->overall_ : nullptr, " ");
  return out.str();
}

}  // namespace eval
}  // namespace geoasr
