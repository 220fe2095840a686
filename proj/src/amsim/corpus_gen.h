// amsim/corpus_gen.h
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
// Synthetic POI corpora: per-province name lists with power-law rank
// frequencies, injected homophone groups sharing unit sequences exactly,
// and seeded dev/test utterance manifests with in-province coordinates.

#ifndef GEOASR_AMSIM_CORPUS_GEN_H_
#define GEOASR_AMSIM_CORPUS_GEN_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "geo/province_table.h"
#include "graph/lexicon.h"

namespace geoasr {
namespace amsim {

struct CorpusOptions {
  std::vector<int> provinces;  // province ids to generate for
  std::vector<int> sizes;      // POI names per province, parallel list
  double homophone_rate = 0.1;
  double tail_exponent = 1.0;
  uint64_t seed = 1;
  int num_units = 40;
  int shared_word_pool = 120;
  int local_word_pool = 60;
  int dev_per_province = 20;
  int test_per_province = 50;
  // Rank-1 frequency; 0 picks max(40, province size).
  int64_t head_frequency = 0;
  // Tail names keep at least this many occurrences so the small-cutoff
  // regime retains them while large cutoffs prune them.
  int64_t min_frequency = 3;
};

struct PoiName {
  std::vector<std::string> words;
  int64_t frequency = 0;
};

struct Utterance {
  std::string id;
  int province = 0;
  double lat = 0.0;
  double lon = 0.0;
  std::vector<std::string> words;
};

struct SyntheticCorpus {
  graph::Lexicon lexicon;
  std::map<int, std::vector<PoiName>> names;  // by province id
  std::vector<std::vector<std::string>> homophone_groups;
  std::vector<Utterance> dev;
  std::vector<Utterance> test;
};

SyntheticCorpus GenerateCorpus(const CorpusOptions &options,
                               const geo::ProvinceTable &table);

// `province<TAB>poi words<TAB>frequency`
std::string NamesToText(const std::map<int, std::vector<PoiName>> &names);
std::map<int, std::vector<PoiName>> NamesFromText(const std::string &text);

// `utt_id<TAB>province<TAB>lat<TAB>lon<TAB>reference words`
std::string ManifestToText(const std::vector<Utterance> &utterances);
std::vector<Utterance> ManifestFromText(const std::string &text);

// One homophone group per line, words space-separated.
std::string HomophonesToText(const std::vector<std::vector<std::string>> &groups);
std::vector<std::vector<std::string>> HomophonesFromText(
    const std::string &text);

// Least-squares slope of log frequency against log rank, restricted to
// entries with at least min_frequency occurrences.
double FitRankFrequencySlope(std::vector<int64_t> frequencies,
                             int64_t min_frequency = 5);

}  // namespace amsim
}  // namespace geoasr

#endif  // GEOASR_AMSIM_CORPUS_GEN_H_
