// tests/geoam_test.cc
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

#include <cmath>

#include "doctest.h"

#include "amsim/toy_batch.h"
#include "geoam/network.h"

namespace geoasr {
namespace geoam {
namespace {

GeoAmConfig SmallConfig() {
  GeoAmConfig config;
  config.feature_dim = 4;
  config.hidden_dim = 6;
  config.num_units = 3;
  config.num_dialects = 4;
  config.seed = 5;
  return config;
}

TEST_CASE("all-zero weights give a uniform posterior") {
  GeoAmConfig config = SmallConfig();
  config.init_scale = 0.0;
  GeoAmNetwork net = GeoAmNetwork::Init(config);
  auto probs = net.Forward(std::vector<double>{0.3, -1.0, 0.5, 2.0}, 2);
  for (double p : probs) {
    CHECK(p == doctest::Approx(1.0 / config.num_units).epsilon(1e-12));
  }
}

TEST_CASE("different dialect vectors change the output") {
  GeoAmNetwork net = GeoAmNetwork::Init(SmallConfig());
  std::vector<double> x{0.3, -1.0, 0.5, 2.0};
  auto p1 = net.Forward(x, 1);
  auto p2 = net.Forward(x, 2);
  bool differ = false;
  for (size_t i = 0; i < p1.size(); ++i) {
    if (p1[i] != p2[i]) differ = true;
  }
  CHECK(differ);
  CHECK_THROWS(net.Forward(x, 0));
  CHECK_THROWS(net.Forward(std::vector<double>{1.0}, 1));
}

TEST_CASE("forward matches a hand-unrolled two-layer computation") {
  GeoAmConfig config;
  config.feature_dim = 2;
  config.hidden_dim = 2;
  config.num_units = 2;
  config.num_dialects = 2;
  config.init_scale = 0.0;
  GeoAmNetwork net = GeoAmNetwork::Init(config);
  // Hand-set parameters.
  auto l1 = net.ParametersOf("body.l1");
  l1[0]->v = {0.5, -0.25, 0.75, 0.1};  // W1
  l1[1]->v = {0.05, -0.1};             // b1
  auto l2 = net.ParametersOf("body.l2");
  l2[0]->v = {0.2, 0.3, -0.4, 0.6};
  l2[1]->v = {0.0, 0.12};
  auto geo = net.ParametersOf("geo");
  geo[0]->v = {0.11, -0.3, 0.07, 0.21};  // Wg, 2x2 (hidden x dialects)
  geo[1]->v = {0.02, -0.05};
  auto head = net.ParametersOf("head.2");
  head[0]->v = {1.0, -0.5, 0.25, 0.8};
  head[1]->v = {0.1, -0.2};

  std::vector<double> x{0.6, -1.1};
  // Hand computation.
  double a1_0 = std::tanh(0.5 * 0.6 + (-0.25) * (-1.1) + 0.05);
  double a1_1 = std::tanh(0.75 * 0.6 + 0.1 * (-1.1) + (-0.1));
  double a2_0 = std::tanh(0.2 * a1_0 + 0.3 * a1_1 + 0.0);
  double a2_1 = std::tanh(-0.4 * a1_0 + 0.6 * a1_1 + 0.12);
  double z0 = a2_0 + (-0.3) + 0.02;  // Wg column for dialect 2
  double z1 = a2_1 + 0.21 + (-0.05);
  double o0 = 1.0 * z0 + (-0.5) * z1 + 0.1;
  double o1 = 0.25 * z0 + 0.8 * z1 + (-0.2);
  double m = std::max(o0, o1);
  double e0 = std::exp(o0 - m), e1 = std::exp(o1 - m);
  double want0 = e0 / (e0 + e1);

  auto probs = net.Forward(x, 2);
  CHECK(probs[0] == doctest::Approx(want0).epsilon(1e-9));
  CHECK(probs[0] + probs[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("softmax outputs always normalize") {
  GeoAmNetwork net = GeoAmNetwork::Init(SmallConfig());
  amsim::ToyBatch batch = amsim::MakeToyBatch(32, 4, 3, {1, 2, 3, 4}, 3);
  for (size_t i = 0; i < batch.Size(); ++i) {
    auto probs = net.Forward(batch.features[i], batch.regions[i]);
    double total = 0;
    for (double p : probs) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("analytic gradients match central finite differences") {
  GeoAmConfig config = SmallConfig();
  GeoAmNetwork net = GeoAmNetwork::Init(config);
  amsim::ToyBatch batch = amsim::MakeToyBatch(12, 4, 3, {1, 2, 3, 4}, 11);
  auto grads = net.Gradients(batch);
  const double eps = 1e-5;
  for (const auto &name : net.GroupNames()) {
    auto params = net.ParametersOf(name);
    const auto &group_grads = grads.at(name);
    for (size_t p = 0; p < params.size(); ++p) {
      for (size_t k = 0; k < params[p]->v.size(); ++k) {
        double saved = params[p]->v[k];
        params[p]->v[k] = saved + eps;
        double up = net.Loss(batch);
        params[p]->v[k] = saved - eps;
        double down = net.Loss(batch);
        params[p]->v[k] = saved;
        double numeric = (up - down) / (2 * eps);
        double analytic = group_grads[p].v[k];
        double denom = std::max({std::abs(numeric), std::abs(analytic), 1e-8});
        INFO("group ", name, " param ", p, " index ", k);
        CHECK(std::abs(numeric - analytic) / denom < 1e-4);
      }
    }
  }
}

TEST_CASE("a full freeze leaves every parameter bit-identical") {
  GeoAmNetwork net = GeoAmNetwork::Init(SmallConfig());
  std::set<std::string> all;
  for (const auto &name : net.GroupNames()) all.insert(name);
  net.SetFreezeMask(all);
  std::string before = net.ToText();
  amsim::ToyBatch batch = amsim::MakeToyBatch(16, 4, 3, {1, 2}, 13);
  double loss = net.TrainStep(batch, 0.1);
  CHECK(loss > 0);
  CHECK(net.ToText() == before);
}

TEST_CASE("training reduces the loss on a separable toy task") {
  GeoAmConfig config;
  config.feature_dim = 8;
  config.hidden_dim = 16;
  config.num_units = 4;
  config.num_dialects = 3;
  config.seed = 17;
  GeoAmNetwork net = GeoAmNetwork::Init(config);
  amsim::ToyBatch batch = amsim::MakeToyBatch(160, 8, 4, {1, 2, 3}, 19);
  std::vector<double> losses;
  for (int step = 0; step < 200; ++step) {
    losses.push_back(net.TrainStep(batch, 0.15));
  }
  // Mean loss over consecutive 10-step windows strictly decreases.
  for (int w = 0; w + 20 <= 200; w += 10) {
    double first = 0, second = 0;
    for (int i = 0; i < 10; ++i) {
      first += losses[w + i];
      second += losses[w + 10 + i];
    }
    CHECK(second < first);
  }
}

TEST_CASE("dialect adaptation trains only the selected head") {
  GeoAmConfig config = SmallConfig();
  GeoAmNetwork net = GeoAmNetwork::Init(config);
  amsim::ToyBatch shared = amsim::MakeToyBatch(200, 4, 3, {1, 2, 3, 4}, 23);
  for (int step = 0; step < 30; ++step) net.TrainStep(shared, 0.1);

  amsim::ToyBatch adapt_data = amsim::MakeToyBatch(200, 4, 3, {1}, 29);
  amsim::ToyBatch probe2 = amsim::MakeToyBatch(50, 4, 3, {2}, 31);
  amsim::ToyBatch probe3 = amsim::MakeToyBatch(50, 4, 3, {3}, 37);

  // Snapshot outputs for other dialects and accuracy before/after.
  auto outputs = [&](const amsim::ToyBatch &b) {
    std::vector<std::vector<double>> out;
    for (size_t i = 0; i < b.Size(); ++i) {
      out.push_back(net.Forward(b.features[i], b.regions[i]));
    }
    return out;
  };
  auto before2 = outputs(probe2);
  auto before3 = outputs(probe3);
  double accuracy_before = net.Accuracy(adapt_data);
  double loss_before = net.Loss(adapt_data);

  net.AdaptDialect(1, adapt_data, 0.1, 60);

  auto after2 = outputs(probe2);
  auto after3 = outputs(probe3);
  for (size_t i = 0; i < before2.size(); ++i) CHECK(before2[i] == after2[i]);
  for (size_t i = 0; i < before3.size(); ++i) CHECK(before3[i] == after3[i]);
  CHECK(net.Loss(adapt_data) < loss_before);
  CHECK(net.Accuracy(adapt_data) >= accuracy_before);

  // Null update: zero learning rate changes nothing.
  std::string snapshot = net.ToText();
  net.AdaptDialect(2, adapt_data, 0.0, 5);
  CHECK(net.ToText() == snapshot);

  CHECK_THROWS(net.AdaptDialect(99, adapt_data, 0.1, 1));
}

TEST_CASE("checkpoints round-trip with the freeze mask") {
  GeoAmNetwork net = GeoAmNetwork::Init(SmallConfig());
  net.SetFreezeMask({"body.l1", "geo"});
  amsim::ToyBatch batch = amsim::MakeToyBatch(16, 4, 3, {1, 2}, 41);
  net.TrainStep(batch, 0.05);
  std::string text = net.ToText();
  GeoAmNetwork restored = GeoAmNetwork::FromText(text);
  CHECK(restored.ToText() == text);
  CHECK(restored.FreezeMask() == net.FreezeMask());
  auto probs_a = net.Forward(batch.features[0], batch.regions[0]);
  auto probs_b = restored.Forward(batch.features[0], batch.regions[0]);
  CHECK(probs_a == probs_b);
}

}  // namespace
}  // namespace geoam
}  // namespace geoasr
