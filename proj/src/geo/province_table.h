// geo/province_table.h
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
// Province-level geography: polygon lookup from coordinates to the
// 34 province records and their 10 dialect regions.

#ifndef GEOASR_GEO_PROVINCE_TABLE_H_
#define GEOASR_GEO_PROVINCE_TABLE_H_

#include <string>
#include <vector>

namespace geoasr {
namespace geo {

struct LatLon {
  double lat = 0.0;
  double lon = 0.0;
};

struct Province {
  int id = 0;
  std::string name;
  int region = 0;  // dialect region, 1..10
  std::vector<LatLon> polygon;
  // Cached bounding box.
  double min_lat = 0, max_lat = 0, min_lon = 0, max_lon = 0;
};

// Even-odd ray casting.
bool PointInPolygon(const LatLon &point, const std::vector<LatLon> &polygon);

class ProvinceTable {
 public:
  static ProvinceTable FromText(const std::string &text);
  static ProvinceTable FromFile(const std::string &path);

  // Deterministic point-in-polygon resolution; points in no polygon (or in
  // several, for the simplified shapes) resolve to the lowest containing id
  // or the designated fallback province.
  struct Resolution {
    int province_id = 0;
    int region_id = 0;
  };
  Resolution Resolve(double lat, double lon) const;

  const Province &Get(int id) const;
  bool Has(int id) const;
  const std::vector<Province> &All() const { return provinces_; }
  int FallbackId() const { return fallback_id_; }

 private:
  std::vector<Province> provinces_;  // sorted by id
  int fallback_id_ = 0;
};

}  // namespace geo
}  // namespace geoasr

#endif  // GEOASR_GEO_PROVINCE_TABLE_H_
