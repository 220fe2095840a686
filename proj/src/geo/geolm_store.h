// geo/geolm_store.h
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
// Per-province store of pre-trained word- and character-level models,
// loaded lazily on first request and pinned for the process lifetime.

#ifndef GEOASR_GEO_GEOLM_STORE_H_
#define GEOASR_GEO_GEOLM_STORE_H_

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ngram/model.h"

namespace geoasr {
namespace geo {

enum class LmLevel { kWord, kCharacter };

class GeoLmStore {
 public:
  GeoLmStore() = default;
  GeoLmStore(GeoLmStore &&other) noexcept
      : entries_(std::move(other.entries_)),
        load_count_(other.load_count_.load()) {}
  GeoLmStore(const GeoLmStore &) = delete;
  GeoLmStore &operator=(const GeoLmStore &) = delete;

  // Manifest lines: `province_id<TAB>word_arpa_path<TAB>char_arpa_path`.
  // Relative paths resolve against base_dir.
  static GeoLmStore FromManifestText(const std::string &text,
                                     const std::string &base_dir);
  static GeoLmStore FromManifestFile(const std::string &path,
                                     const std::string &base_dir);

  // Loads at most once per (province, level); safe for concurrent readers,
  // loading serialized per province.
  std::shared_ptr<const ngram::NGramModel> Select(int province_id,
                                                  LmLevel level) const;

  bool Registered(int province_id) const;
  std::vector<int> RegisteredProvinces() const;

  // Completed loads, for idempotence checks.
  int LoadCount() const;

 private:
  struct Entry {
    std::string word_path;
    std::string char_path;
    mutable std::mutex mutex;
    mutable std::shared_ptr<const ngram::NGramModel> word_model;
    mutable std::shared_ptr<const ngram::NGramModel> char_model;
  };
  // map keeps Entry addresses stable; Entry itself is not movable.
  mutable std::map<int, Entry> entries_;
  mutable std::atomic<int> load_count_{0};
};

}  // namespace geo
}  // namespace geoasr

#endif  // GEOASR_GEO_GEOLM_STORE_H_
