// amsim/corpus_gen.cc
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

#include "amsim/corpus_gen.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "base/error.h"
#include "base/rng.h"
#include "base/stringutil.h"

namespace geoasr {
namespace amsim {

namespace {

// Pinyin-like syllables for the synthetic unit inventory.
const char *kSyllables[] = {
    "an",  "bei", "bo",  "chang", "chi", "da",  "dian", "dong", "du",  "er",
    "fang","fu",  "gang","gao",   "gu",  "hai", "he",   "hu",   "hua", "ji",
    "jiang","jie","jin", "jing",  "kou", "li",  "lin",  "ling", "lu",  "men",
    "miao","nan", "ning","pu",    "qiao","qu",  "shan", "shi",  "shui","si",
    "ta",  "tai", "tang","tian",  "wan", "wei", "xi",   "xia",  "yang","yuan",
    "yun", "zhen","zhong","zhou", "zhu", "zi"};

geo::LatLon SamplePointInside(const geo::Province &province, Rng *rng) {
  // Convex simplified polygons: sample inside the inscribed circle.
  double clat = 0, clon = 0;
  for (const auto &v : province.polygon) {
    clat += v.lat;
    clon += v.lon;
  }
  clat /= province.polygon.size();
  clon /= province.polygon.size();
  // Distance from the centroid to the nearest edge.
  double inradius = 1e9;
  size_t n = province.polygon.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const auto &a = province.polygon[j];
    const auto &b = province.polygon[i];
    double ex = b.lat - a.lat, ey = b.lon - a.lon;
    double px = clat - a.lat, py = clon - a.lon;
    double t = std::clamp((px * ex + py * ey) / (ex * ex + ey * ey), 0.0, 1.0);
    double dx = px - t * ex, dy = py - t * ey;
    inradius = std::min(inradius, std::hypot(dx, dy));
  }
  double radius = 0.9 * inradius * std::sqrt(rng->NextDouble());
  double angle = 2.0 * M_PI * rng->NextDouble();
  return {clat + radius * std::cos(angle), clon + radius * std::sin(angle)};
}

}  // namespace

SyntheticCorpus GenerateCorpus(const CorpusOptions &options,
                               const geo::ProvinceTable &table) {
  GEOASR_CHECK(!options.provinces.empty()) << "no provinces requested";
  GEOASR_CHECK(options.provinces.size() == options.sizes.size())
      << "provinces and sizes must be parallel lists";
  GEOASR_CHECK(options.homophone_rate >= 0 && options.homophone_rate <= 1)
      << "homophone rate must be in [0,1]";
  GEOASR_CHECK(options.tail_exponent > 0) << "tail exponent must be positive";
  GEOASR_CHECK(options.num_units >= 8 &&
               options.num_units <=
                   static_cast<int>(std::size(kSyllables)))
      << "unit inventory must be 8.." << std::size(kSyllables);
  for (int size : options.sizes) {
    GEOASR_CHECK(size >= 1) << "province corpus size must be >= 1";
  }

  SyntheticCorpus corpus;
  std::set<std::vector<std::string>> used_unit_seqs;
  std::map<std::string, std::vector<std::string>> word_units;

  // A word is a fresh 2-3 syllable sequence; its name is the concatenation
  // so homophone twins can share the unit split under a distinct name.
  auto make_pool = [&](int count, Rng *rng) {
    std::vector<std::string> pool;
    while (static_cast<int>(pool.size()) < count) {
      int len = 2 + static_cast<int>(rng->NextIndex(2));
      std::vector<std::string> units;
      for (int i = 0; i < len; ++i) {
        units.push_back(kSyllables[rng->NextIndex(options.num_units)]);
      }
      if (!used_unit_seqs.insert(units).second) continue;
      std::string word;
      for (const auto &u : units) word += u;
      word_units[word] = units;
      pool.push_back(word);
    }
    return pool;
  };
  Rng shared_rng = Rng::ForItem(options.seed, 0);
  std::vector<std::string> shared_pool =
      make_pool(options.shared_word_pool, &shared_rng);

  std::map<int, std::vector<std::string>> local_pools;
  for (size_t i = 0; i < options.provinces.size(); ++i) {
    int province = options.provinces[i];
    GEOASR_CHECK(table.Has(province)) << "unknown province id " << province;
    Rng rng = Rng::ForItem(options.seed, 100 + province);
    local_pools[province] = make_pool(options.local_word_pool, &rng);
  }

  // Homophone injection: a local word of province p gets a same-sounding
  // twin placed in the next requested province's pool.
  if (options.homophone_rate > 0 && options.provinces.size() >= 2) {
    for (size_t i = 0; i < options.provinces.size(); ++i) {
      int province = options.provinces[i];
      int other = options.provinces[(i + 1) % options.provinces.size()];
      auto &pool = local_pools[province];
      int twins = static_cast<int>(
          std::llround(options.homophone_rate * pool.size()));
      Rng rng = Rng::ForItem(options.seed, 500 + province);
      for (int t = 0; t < twins; ++t) {
        const std::string &base = pool[rng.NextIndex(pool.size())];
        std::string twin = base + "2";
        if (word_units.count(twin) != 0) continue;  // already twinned
        word_units[twin] = word_units[base];
        local_pools[other].push_back(twin);
        corpus.homophone_groups.push_back({base, twin});
      }
    }
  }

  for (const auto &[word, units] : word_units) {
    corpus.lexicon.entries[word] = {units};
  }

  // Per-province POI names with power-law frequencies.
  for (size_t i = 0; i < options.provinces.size(); ++i) {
    int province = options.provinces[i];
    int size = options.sizes[i];
    const auto &locals = local_pools[province];
    Rng rng = Rng::ForItem(options.seed, 1000 + province);
    std::set<std::vector<std::string>> seen;
    std::vector<PoiName> names;
    int64_t head = options.head_frequency > 0
                       ? options.head_frequency
                       : std::max<int64_t>(40, size);
    while (static_cast<int>(names.size()) < size) {
      int len = 1 + static_cast<int>(rng.NextIndex(3));
      std::vector<std::string> words;
      for (int w = 0; w < len; ++w) {
        bool local = rng.NextDouble() < 0.6;
        const auto &pool = local ? locals : shared_pool;
        words.push_back(pool[rng.NextIndex(pool.size())]);
      }
      if (!seen.insert(words).second) continue;
      int rank = static_cast<int>(names.size()) + 1;
      int64_t freq = std::max(
          options.min_frequency,
          static_cast<int64_t>(std::llround(
              head * std::pow(rank, -options.tail_exponent))));
      names.push_back({std::move(words), freq});
    }
    corpus.names[province] = std::move(names);
  }

  // Dev/test utterances: alternate frequency-weighted and uniform draws so
  // the tail is represented.
  auto sample_split = [&](int per_province, const char *tag,
                          std::vector<Utterance> *out, uint64_t salt) {
    for (size_t i = 0; i < options.provinces.size(); ++i) {
      int province = options.provinces[i];
      const auto &names = corpus.names[province];
      const geo::Province &geo_province = table.Get(province);
      Rng rng = Rng::ForItem(options.seed, salt + province);
      std::vector<double> weights;
      weights.reserve(names.size());
      for (const auto &n : names) {
        weights.push_back(static_cast<double>(n.frequency));
      }
      for (int u = 0; u < per_province; ++u) {
        size_t pick = (u % 2 == 0) ? rng.NextWeighted(weights)
                                   : rng.NextIndex(names.size());
        Utterance utt;
        utt.id = "p" + std::to_string(province) + "_" + tag + "_" +
                 std::to_string(u);
        utt.province = province;
        geo::LatLon point = SamplePointInside(geo_province, &rng);
        utt.lat = point.lat;
        utt.lon = point.lon;
        utt.words = names[pick].words;
        out->push_back(std::move(utt));
      }
    }
  };
  sample_split(options.dev_per_province, "dev", &corpus.dev, 5000);
  sample_split(options.test_per_province, "test", &corpus.test, 9000);
  return corpus;
}

std::string NamesToText(const std::map<int, std::vector<PoiName>> &names) {
  std::ostringstream out;
  for (const auto &[province, list] : names) {
    for (const auto &name : list) {
      out << province << "\t" << JoinFields(name.words, " ") << "\t"
          << name.frequency << "\n";
    }
  }
  return out.str();
}

std::map<int, std::vector<PoiName>> NamesFromText(const std::string &text) {
  std::map<int, std::vector<PoiName>> names;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripLineEnding(line);
    if (line.empty() || line[0] == '#') continue;
    auto fields = SplitTabs(line);
    long long province = 0, freq = 0;
    GEOASR_CHECK(fields.size() == 3 && ParseInt(fields[0], &province) &&
                 ParseInt(fields[2], &freq) && freq >= 0)
        << "bad corpus line " << line_no << ": " << line;
    names[static_cast<int>(province)].push_back(
        {SplitFields(fields[1], " "), freq});
  }
  return names;
}

std::string ManifestToText(const std::vector<Utterance> &utterances) {
  std::ostringstream out;
  char buf[64];
  for (const auto &u : utterances) {
    out << u.id << "\t" << u.province << "\t";
    std::snprintf(buf, sizeof(buf), "%.6f", u.lat);
    out << buf << "\t";
    std::snprintf(buf, sizeof(buf), "%.6f", u.lon);
    out << buf << "\t" << JoinFields(u.words, " ") << "\n";
  }
  return out.str();
}

std::vector<Utterance> ManifestFromText(const std::string &text) {
  std::vector<Utterance> out;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripLineEnding(line);
    if (line.empty() || line[0] == '#') continue;
    auto fields = SplitTabs(line);
    GEOASR_CHECK(fields.size() == 5) << "bad manifest line " << line_no;
    Utterance u;
    u.id = fields[0];
    long long province = 0;
    GEOASR_CHECK(ParseInt(fields[1], &province) &&
                 ParseDouble(fields[2], &u.lat) &&
                 ParseDouble(fields[3], &u.lon))
        << "bad manifest fields on line " << line_no;
    u.province = static_cast<int>(province);
    u.words = SplitFields(fields[4], " ");
    out.push_back(std::move(u));
  }
  return out;
}

std::string HomophonesToText(
    const std::vector<std::vector<std::string>> &groups) {
  std::ostringstream out;
  for (const auto &group : groups) out << JoinFields(group, " ") << "\n";
  return out.str();
}

std::vector<std::vector<std::string>> HomophonesFromText(
    const std::string &text) {
  std::vector<std::vector<std::string>> groups;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = StripLineEnding(line);
    if (line.empty()) continue;
    groups.push_back(SplitFields(line, " "));
  }
  return groups;
}

double FitRankFrequencySlope(std::vector<int64_t> frequencies,
                             int64_t min_frequency) {
  std::sort(frequencies.begin(), frequencies.end(), std::greater<>());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (size_t i = 0; i < frequencies.size(); ++i) {
    if (frequencies[i] < min_frequency) break;
    double x = std::log(static_cast<double>(i + 1));
    double y = std::log(static_cast<double>(frequencies[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  GEOASR_CHECK(n >= 3) << "too few points above the frequency floor to fit";
  double denom = n * sxx - sx * sx;
  GEOASR_CHECK(std::abs(denom) > 1e-12) << "degenerate rank-frequency fit";
  return (n * sxy - sx * sy) / denom;
}

}  // namespace amsim
}  // namespace geoasr
