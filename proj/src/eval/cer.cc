// eval/cer.cc
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

#include "eval/cer.h"

#include <algorithm>

#include "base/error.h"

namespace geoasr {
namespace eval {

std::vector<EditOp> Align(std::span<const std::string> reference,
                          std::span<const std::string> hypothesis) {
  size_t n = reference.size();
  size_t m = hypothesis.size();
  // dp[i][j]: cost of aligning ref[0..i) with hyp[0..j).
  std::vector<std::vector<int64_t>> dp(n + 1, std::vector<int64_t>(m + 1, 0));
  for (size_t i = 0; i <= n; ++i) dp[i][0] = static_cast<int64_t>(i);
  for (size_t j = 0; j <= m; ++j) dp[0][j] = static_cast<int64_t>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      int64_t diag = dp[i - 1][j - 1] + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      int64_t del = dp[i - 1][j] + 1;
      int64_t ins = dp[i][j - 1] + 1;
      dp[i][j] = std::min({diag, del, ins});
    }
  }
  // Backtrace, preferring diagonal, then deletion, then insertion.
  std::vector<EditOp> ops;
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      int64_t diag =
          dp[i - 1][j - 1] + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      if (dp[i][j] == diag) {
        ops.push_back(reference[i - 1] == hypothesis[j - 1]
                          ? EditOp::kMatch
                          : EditOp::kSubstitute);
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && dp[i][j] == dp[i - 1][j] + 1) {
      ops.push_back(EditOp::kDelete);
      --i;
      continue;
    }
    ops.push_back(EditOp::kInsert);
    --j;
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

EditCounts Cer(std::span<const std::string> reference,
               std::span<const std::string> hypothesis) {
  GEOASR_CHECK(!reference.empty()) << "empty reference in CER computation";
  EditCounts counts;
  counts.reference_length = static_cast<int64_t>(reference.size());
  for (EditOp op : Align(reference, hypothesis)) {
    switch (op) {
      case EditOp::kMatch:
        break;
      case EditOp::kSubstitute:
        ++counts.substitutions;
        break;
      case EditOp::kDelete:
        ++counts.deletions;
        break;
      case EditOp::kInsert:
        ++counts.insertions;
        break;
    }
  }
  return counts;
}

double RelativeReduction(double baseline_cer, double system_cer) {
  GEOASR_CHECK(baseline_cer > 0) << "relative reduction needs baseline > 0";
  return 100.0 * (baseline_cer - system_cer) / baseline_cer;
}

}  // namespace eval
}  // namespace geoasr
