// geo/geolm_store.cc
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

#include "geo/geolm_store.h"

#include <sstream>

#include "base/error.h"
#include "base/fileio.h"
#include "base/stringutil.h"
#include "ngram/arpa.h"

namespace geoasr {
namespace geo {

namespace {

std::string JoinPath(const std::string &base, const std::string &path) {
  if (base.empty() || path.empty() || path[0] == '/') return path;
  return base.back() == '/' ? base + path : base + "/" + path;
}

}  // namespace

GeoLmStore GeoLmStore::FromManifestText(const std::string &text,
                                        const std::string &base_dir) {
  GeoLmStore store;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripLineEnding(line);
    if (line.empty() || line[0] == '#') continue;
    auto fields = SplitTabs(line);
    long long id = 0;
    GEOASR_CHECK(fields.size() == 3 && ParseInt(fields[0], &id) && id >= 1)
        << "bad store manifest line " << line_no << ": " << line;
    Entry &entry = store.entries_[static_cast<int>(id)];
    entry.word_path = JoinPath(base_dir, fields[1]);
    entry.char_path = JoinPath(base_dir, fields[2]);
  }
  return store;
}

GeoLmStore GeoLmStore::FromManifestFile(const std::string &path,
                                        const std::string &base_dir) {
  return FromManifestText(ReadFile(path), base_dir);
}

std::shared_ptr<const ngram::NGramModel> GeoLmStore::Select(
    int province_id, LmLevel level) const {
  auto it = entries_.find(province_id);
  GEOASR_CHECK(it != entries_.end())
      << "province " << province_id << " has no registered models";
  Entry &entry = it->second;
  std::lock_guard<std::mutex> lock(entry.mutex);
  auto &slot =
      level == LmLevel::kWord ? entry.word_model : entry.char_model;
  if (!slot) {
    const std::string &path =
        level == LmLevel::kWord ? entry.word_path : entry.char_path;
    slot = std::make_shared<const ngram::NGramModel>(
        ngram::ReadArpaFile(path));
    load_count_.fetch_add(1, std::memory_order_relaxed);
  }
  return slot;
}

bool GeoLmStore::Registered(int province_id) const {
  return entries_.find(province_id) != entries_.end();
}

std::vector<int> GeoLmStore::RegisteredProvinces() const {
  std::vector<int> ids;
  ids.reserve(entries_.size());
  for (const auto &[id, entry] : entries_) ids.push_back(id);
  return ids;
}

int GeoLmStore::LoadCount() const {
  return load_count_.load(std::memory_order_relaxed);
}

}  // namespace geo
}  // namespace geoasr
