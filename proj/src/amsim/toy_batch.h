// amsim/toy_batch.h
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
// Synthetic classification batches for the toy acoustic-model experiments:
// per-class Gaussian clusters whose means shift per dialect region, so
// region-aware models have something to gain.

#ifndef GEOASR_AMSIM_TOY_BATCH_H_
#define GEOASR_AMSIM_TOY_BATCH_H_

#include <cstdint>
#include <string>
#include <vector>

namespace geoasr {
namespace amsim {

struct ToyBatch {
  int feature_dim = 0;
  int num_classes = 0;
  std::vector<std::vector<double>> features;
  std::vector<int> labels;   // 0..num_classes-1
  std::vector<int> regions;  // dialect regions, 1..10

  size_t Size() const { return features.size(); }
  void Validate() const;
};

// Rows drawn round-robin over `regions`; deterministic in the seed.
ToyBatch MakeToyBatch(int rows, int feature_dim, int num_classes,
                      const std::vector<int> &regions, uint64_t seed);

// Text rows: `region<TAB>label<TAB>f1 f2 ... fD`.
std::string ToyBatchToText(const ToyBatch &batch);
ToyBatch ToyBatchFromText(const std::string &text);

}  // namespace amsim
}  // namespace geoasr

#endif  // GEOASR_AMSIM_TOY_BATCH_H_
