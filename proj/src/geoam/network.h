// geoam/network.h
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
// Toy geographic acoustic model: a two-layer tanh body, a one-hot dialect
// vector injected through an affine map into the second layer's output, and
// one affine+softmax head per dialect region.  Parameter groups can be
// frozen individually; frozen groups stay bit-identical under training.

#ifndef GEOASR_GEOAM_NETWORK_H_
#define GEOASR_GEOAM_NETWORK_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "amsim/toy_batch.h"

namespace geoasr {
namespace geoam {

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;  // row-major

  static Matrix Zeros(int r, int c) { return {r, c, std::vector<double>(r * c, 0.0)}; }

  double &At(int r, int c) { return v[r * cols + c]; }
  double At(int r, int c) const { return v[r * cols + c]; }
};

struct GeoAmConfig {
  int feature_dim = 16;
  int hidden_dim = 64;
  int num_units = 8;
  int num_dialects = 10;
  double init_scale = 0.5;
  uint64_t seed = 1;
};

class GeoAmNetwork {
 public:
  static GeoAmNetwork Init(const GeoAmConfig &config);

  const GeoAmConfig &Config() const { return config_; }

  // Posterior over units for one sample routed through head[dialect].
  std::vector<double> Forward(std::span<const double> features,
                              int dialect) const;

  // Group names: body.l1, body.l2, geo, head.1 .. head.D.
  std::vector<std::string> GroupNames() const;
  const std::set<std::string> &FreezeMask() const { return freeze_mask_; }
  void SetFreezeMask(std::set<std::string> mask);

  // One cross-entropy SGD step on the unfrozen groups; returns the batch
  // mean loss before the update.
  double TrainStep(const amsim::ToyBatch &batch, double learning_rate);

  // Trains only head[dialect] on the given batches.
  void AdaptDialect(int dialect, const amsim::ToyBatch &batch,
                    double learning_rate, int steps);

  double Loss(const amsim::ToyBatch &batch) const;
  double Accuracy(const amsim::ToyBatch &batch) const;

  // Mean-loss gradients in group order, matching ParametersOf's layout
  // (used directly by the finite-difference checks).
  std::map<std::string, std::vector<Matrix>> Gradients(
      const amsim::ToyBatch &batch) const;

  // Mutable access to a group's matrices ({W, b} pairs).
  std::vector<Matrix *> ParametersOf(const std::string &group);
  std::vector<const Matrix *> ParametersOf(const std::string &group) const;

  std::string ToText() const;
  static GeoAmNetwork FromText(const std::string &text);

 private:
  GeoAmConfig config_;
  Matrix w1_, b1_, w2_, b2_, wg_, bg_;
  std::vector<Matrix> head_w_, head_b_;
  std::set<std::string> freeze_mask_;

  struct ForwardTrace {
    std::vector<double> h1, h2, z, probs;
  };
  ForwardTrace ForwardTraced(std::span<const double> features,
                             int dialect) const;
};

}  // namespace geoam
}  // namespace geoasr

#endif  // GEOASR_GEOAM_NETWORK_H_
