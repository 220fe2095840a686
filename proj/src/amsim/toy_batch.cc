// amsim/toy_batch.cc
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

#include "amsim/toy_batch.h"

#include <cstdio>
#include <sstream>

#include "base/error.h"
#include "base/rng.h"
#include "base/stringutil.h"

namespace geoasr {
namespace amsim {

void ToyBatch::Validate() const {
  GEOASR_CHECK(features.size() == labels.size() &&
               features.size() == regions.size())
      << "inconsistent batch column lengths";
  for (const auto &row : features) {
    GEOASR_CHECK(static_cast<int>(row.size()) == feature_dim)
        << "feature row size mismatch";
  }
  for (int label : labels) {
    GEOASR_CHECK(label >= 0 && label < num_classes)
        << "label " << label << " out of range";
  }
  for (int region : regions) {
    GEOASR_CHECK(region >= 1 && region <= 10)
        << "region " << region << " out of range";
  }
}

ToyBatch MakeToyBatch(int rows, int feature_dim, int num_classes,
                      const std::vector<int> &regions, uint64_t seed) {
  GEOASR_CHECK(rows >= 1 && feature_dim >= 1 && num_classes >= 2)
      << "bad toy batch shape";
  GEOASR_CHECK(!regions.empty()) << "no regions to draw from";
  ToyBatch batch;
  batch.feature_dim = feature_dim;
  batch.num_classes = num_classes;
  Rng rng(seed);
  // Deterministic class means and per-(region, class) shifts.
  auto class_mean = [&](int label, int dim) {
    Rng r = Rng::ForItem(0xC1A55ULL + label, dim);
    return 2.0 * r.NextGaussian();
  };
  auto region_shift = [&](int region, int label, int dim) {
    Rng r = Rng::ForItem(0x4E610ULL + 100 * region + label, dim);
    return 0.9 * r.NextGaussian();
  };
  for (int i = 0; i < rows; ++i) {
    int region = regions[i % regions.size()];
    int label = static_cast<int>(rng.NextIndex(num_classes));
    std::vector<double> row(feature_dim);
    for (int d = 0; d < feature_dim; ++d) {
      row[d] = class_mean(label, d) + region_shift(region, label, d) +
               0.6 * rng.NextGaussian();
    }
    batch.features.push_back(std::move(row));
    batch.labels.push_back(label);
    batch.regions.push_back(region);
  }
  return batch;
}

std::string ToyBatchToText(const ToyBatch &batch) {
  std::ostringstream out;
  char buf[64];
  for (size_t i = 0; i < batch.Size(); ++i) {
    out << batch.regions[i] << "\t" << batch.labels[i] << "\t";
    for (int d = 0; d < batch.feature_dim; ++d) {
      std::snprintf(buf, sizeof(buf), "%.17g", batch.features[i][d]);
      out << (d > 0 ? " " : "") << buf;
    }
    out << "\n";
  }
  return out.str();
}

ToyBatch ToyBatchFromText(const std::string &text) {
  ToyBatch batch;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripLineEnding(line);
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    long long region = 0, label = 0;
    GEOASR_CHECK(fields.size() == 3 && ParseInt(fields[0], &region) &&
                 ParseInt(fields[1], &label))
        << "bad toy batch line " << line_no;
    std::vector<double> row;
    for (const auto &f : SplitFields(fields[2], " ")) {
      double v = 0;
      GEOASR_CHECK(ParseDouble(f, &v)) << "bad feature on line " << line_no;
      row.push_back(v);
    }
    if (batch.feature_dim == 0) batch.feature_dim = static_cast<int>(row.size());
    batch.num_classes = std::max(batch.num_classes, static_cast<int>(label) + 1);
    batch.features.push_back(std::move(row));
    batch.labels.push_back(static_cast<int>(label));
    batch.regions.push_back(static_cast<int>(region));
  }
  batch.Validate();
  return batch;
}

}  // namespace amsim
}  // namespace geoasr
