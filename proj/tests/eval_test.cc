// tests/eval_test.cc
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

#include <map>

#include "doctest.h"

#include "base/rng.h"
#include "base/stringutil.h"
#include "eval/cer.h"
#include "eval/report.h"

namespace geoasr {
namespace eval {
namespace {

// Plain recursive edit distance with memoization; no DP table sharing with
// the implementation under test.
int64_t BruteDistance(std::span<const std::string> a,
                      std::span<const std::string> b,
                      std::map<std::pair<size_t, size_t>, int64_t> *memo) {
  auto key = std::make_pair(a.size(), b.size());
  auto it = memo->find(key);
  if (it != memo->end()) return it->second;
  int64_t result;
  if (a.empty()) {
    result = static_cast<int64_t>(b.size());
  } else if (b.empty()) {
    result = static_cast<int64_t>(a.size());
  } else {
    int64_t sub = BruteDistance(a.subspan(1), b.subspan(1), memo) +
                  (a[0] == b[0] ? 0 : 1);
    int64_t del = BruteDistance(a.subspan(1), b, memo) + 1;
    int64_t ins = BruteDistance(a, b.subspan(1), memo) + 1;
    result = std::min({sub, del, ins});
  }
  memo->emplace(key, result);
  return result;
}

int64_t BruteDistance(const std::vector<std::string> &a,
                      const std::vector<std::string> &b) {
  std::map<std::pair<size_t, size_t>, int64_t> memo;
  return BruteDistance(std::span(a), std::span(b), &memo);
}

TEST_CASE("single substitution in a four-character name") {
  auto ref = Utf8Characters("北京大学");
  auto hyp = Utf8Characters("北京天学");
  REQUIRE(ref.size() == 4);
  EditCounts counts = Cer(ref, hyp);
  CHECK(counts.substitutions == 1);
  CHECK(counts.deletions == 0);
  CHECK(counts.insertions == 0);
  CHECK(counts.reference_length == 4);
  CHECK(counts.Cer() == doctest::Approx(0.25));
}

TEST_CASE("identical strings have zero CER") {
  auto ref = Utf8Characters("北京大学");
  EditCounts counts = Cer(ref, ref);
  CHECK(counts.Errors() == 0);
  CHECK(counts.Cer() == 0.0);
}

TEST_CASE("empty reference is rejected") {
  std::vector<std::string> empty, hyp{"a"};
  CHECK_THROWS(Cer(empty, hyp));
}

TEST_CASE("edit distance matches a brute-force reference on random pairs") {
  Rng rng(3);
  std::vector<std::string> alphabet{"甲", "乙", "丙", "丁"};
  for (int trial = 0; trial < 300; ++trial) {
    size_t n = 1 + rng.NextIndex(12);
    size_t m = rng.NextIndex(13);
    std::vector<std::string> ref, hyp;
    for (size_t i = 0; i < n; ++i) {
      ref.push_back(alphabet[rng.NextIndex(alphabet.size())]);
    }
    for (size_t j = 0; j < m; ++j) {
      hyp.push_back(alphabet[rng.NextIndex(alphabet.size())]);
    }
    EditCounts counts = Cer(ref, hyp);
    CHECK(counts.Errors() == BruteDistance(ref, hyp));
  }
}

TEST_CASE("substitution is preferred over deletion plus insertion") {
  std::vector<std::string> ref{"a", "b", "c"};
  std::vector<std::string> hyp{"a", "x", "c"};
  EditCounts counts = Cer(ref, hyp);
  CHECK(counts.substitutions == 1);
  CHECK(counts.deletions == 0);
  CHECK(counts.insertions == 0);
}

TEST_CASE("triangle inequality holds on random triples") {
  Rng rng(5);
  std::vector<std::string> alphabet{"p", "q", "r"};
  auto random_seq = [&]() {
    std::vector<std::string> s;
    size_t n = 1 + rng.NextIndex(8);
    for (size_t i = 0; i < n; ++i) {
      s.push_back(alphabet[rng.NextIndex(alphabet.size())]);
    }
    return s;
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_seq(), b = random_seq(), c = random_seq();
    int64_t ab = Cer(a, b).Errors();
    int64_t bc = Cer(b, c).Errors();
    int64_t ac = Cer(a, c).Errors();
    CHECK(ac <= ab + bc);
  }
}

TEST_CASE("published relative-reduction arithmetic") {
  CHECK(RelativeReduction(4.70, 3.82) == doctest::Approx(18.7).epsilon(0.01));
  CHECK(RelativeReduction(11.30, 10.16) ==
        doctest::Approx(10.1).epsilon(0.01));
  CHECK(RelativeReduction(5.0, 5.0) == 0.0);
  CHECK_THROWS(RelativeReduction(0.0, 1.0));
}

TEST_CASE("report groups sum to the overall row") {
  Rng rng(9);
  std::vector<std::string> alphabet{"x", "y", "z"};
  CerReport report;
  EditCounts manual_total;
  for (int i = 0; i < 60; ++i) {
    std::vector<std::string> ref, hyp;
    size_t n = 1 + rng.NextIndex(6);
    for (size_t k = 0; k < n; ++k) {
      ref.push_back(alphabet[rng.NextIndex(3)]);
      hyp.push_back(alphabet[rng.NextIndex(3)]);
    }
    std::string group = "g" + std::to_string(i % 4);
    report.Add(group, ref, hyp);
    manual_total += Cer(ref, hyp);
  }
  EditCounts group_sum;
  for (const auto &[group, counts] : report.Groups()) group_sum += counts;
  CHECK(group_sum.Errors() == report.Overall().Errors());
  CHECK(group_sum.reference_length == report.Overall().reference_length);
  CHECK(manual_total.Errors() == report.Overall().Errors());

  // Rendering includes every group plus the overall row.
  std::string tsv = report.ToTsv();
  for (const auto &[group, counts] : report.Groups()) {
    CHECK(tsv.find(group) != std::string::npos);
  }
  CHECK(tsv.find("overall") != std::string::npos);

  CerReport baseline = std::move(report);
  std::string with_cerr = baseline.ToTsv(&baseline, "self");
  CHECK(with_cerr.find("CERR_vs_self") != std::string::npos);
}

}  // namespace
}  // namespace eval
}  // namespace geoasr
