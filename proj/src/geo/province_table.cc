// geo/province_table.cc
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

#include "geo/province_table.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "base/error.h"
#include "base/fileio.h"
#include "base/stringutil.h"

namespace geoasr {
namespace geo {

bool PointInPolygon(const LatLon &point, const std::vector<LatLon> &polygon) {
  bool inside = false;
  size_t n = polygon.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const LatLon &a = polygon[i];
    const LatLon &b = polygon[j];
    if ((a.lat > point.lat) != (b.lat > point.lat)) {
      double cross_lon =
          (b.lon - a.lon) * (point.lat - a.lat) / (b.lat - a.lat) + a.lon;
      if (point.lon < cross_lon) inside = !inside;
    }
  }
  return inside;
}

ProvinceTable ProvinceTable::FromText(const std::string &text) {
  ProvinceTable table;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripLineEnding(line);
    if (line.empty() || line[0] == '#') continue;
    auto fields = SplitTabs(line);
    if (fields[0] == "fallback") {
      long long id = 0;
      GEOASR_CHECK(fields.size() == 2 && ParseInt(fields[1], &id))
          << "bad fallback line " << line_no;
      table.fallback_id_ = static_cast<int>(id);
      continue;
    }
    GEOASR_CHECK(fields[0] == "province" && fields.size() == 5)
        << "bad region data line " << line_no << ": " << line;
    Province p;
    long long id = 0, region = 0;
    GEOASR_CHECK(ParseInt(fields[1], &id) && ParseInt(fields[3], &region))
        << "bad province id/region on line " << line_no;
    p.id = static_cast<int>(id);
    p.name = fields[2];
    p.region = static_cast<int>(region);
    GEOASR_CHECK(p.region >= 1 && p.region <= 10)
        << "dialect region " << p.region << " out of range on line "
        << line_no;
    for (const auto &pair : SplitFields(fields[4], " ")) {
      auto comma = pair.find(',');
      GEOASR_CHECK(comma != std::string::npos)
          << "bad vertex " << pair << " on line " << line_no;
      LatLon v;
      GEOASR_CHECK(ParseDouble(pair.substr(0, comma), &v.lat) &&
                   ParseDouble(pair.substr(comma + 1), &v.lon))
          << "bad vertex " << pair << " on line " << line_no;
      p.polygon.push_back(v);
    }
    GEOASR_CHECK(p.polygon.size() >= 3)
        << "province " << p.name << " needs at least 3 vertices";
    p.min_lat = p.max_lat = p.polygon[0].lat;
    p.min_lon = p.max_lon = p.polygon[0].lon;
    for (const auto &v : p.polygon) {
      p.min_lat = std::min(p.min_lat, v.lat);
      p.max_lat = std::max(p.max_lat, v.lat);
      p.min_lon = std::min(p.min_lon, v.lon);
      p.max_lon = std::max(p.max_lon, v.lon);
    }
    table.provinces_.push_back(std::move(p));
  }
  std::sort(table.provinces_.begin(), table.provinces_.end(),
            [](const Province &a, const Province &b) { return a.id < b.id; });
  GEOASR_CHECK(table.provinces_.size() == 34)
      << "expected 34 provinces, got " << table.provinces_.size();
  for (size_t i = 0; i < table.provinces_.size(); ++i) {
    GEOASR_CHECK(table.provinces_[i].id == static_cast<int>(i) + 1)
        << "province ids must be dense 1..34";
  }
  GEOASR_CHECK(table.Has(table.fallback_id_))
      << "fallback province " << table.fallback_id_ << " not in table";
  return table;
}

ProvinceTable ProvinceTable::FromFile(const std::string &path) {
  return FromText(ReadFile(path));
}

ProvinceTable::Resolution ProvinceTable::Resolve(double lat,
                                                 double lon) const {
  GEOASR_CHECK(std::isfinite(lat) && std::isfinite(lon))
      << "non-finite coordinates";
  LatLon point{lat, lon};
  for (const Province &p : provinces_) {
    if (lat < p.min_lat || lat > p.max_lat || lon < p.min_lon ||
        lon > p.max_lon) {
      continue;
    }
    if (PointInPolygon(point, p.polygon)) return {p.id, p.region};
  }
  const Province &fb = Get(fallback_id_);
  return {fb.id, fb.region};
}

const Province &ProvinceTable::Get(int id) const {
  GEOASR_CHECK(Has(id)) << "unknown province id " << id;
  return provinces_[id - 1];
}

bool ProvinceTable::Has(int id) const {
  return id >= 1 && id <= static_cast<int>(provinces_.size());
}

}  // namespace geo
}  // namespace geoasr
