// geoam/network.cc
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

#include "geoam/network.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "base/error.h"
#include "base/rng.h"
#include "base/stringutil.h"

namespace geoasr {
namespace geoam {

namespace {

Matrix RandomMatrix(int rows, int cols, double scale, Rng *rng) {
  Matrix m = Matrix::Zeros(rows, cols);
  for (double &x : m.v) x = scale * rng->NextGaussian();
  return m;
}

// y = W x + b
std::vector<double> Affine(const Matrix &w, const Matrix &b,
                           std::span<const double> x) {
  std::vector<double> y(w.rows);
  for (int r = 0; r < w.rows; ++r) {
    double acc = b.v[r];
    for (int c = 0; c < w.cols; ++c) acc += w.At(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

void SoftmaxInPlace(std::vector<double> *v) {
  double max = *std::max_element(v->begin(), v->end());
  double total = 0.0;
  for (double &x : *v) {
    x = std::exp(x - max);
    total += x;
  }
  for (double &x : *v) x /= total;
}

}  // namespace

GeoAmNetwork GeoAmNetwork::Init(const GeoAmConfig &config) {
  GEOASR_CHECK(config.feature_dim >= 1 && config.hidden_dim >= 1 &&
               config.num_units >= 2 && config.num_dialects >= 1)
      << "bad network configuration";
  GeoAmNetwork net;
  net.config_ = config;
  Rng rng(config.seed);
  double s = config.init_scale / std::sqrt(config.hidden_dim);
  net.w1_ = RandomMatrix(config.hidden_dim, config.feature_dim, s, &rng);
  net.b1_ = Matrix::Zeros(config.hidden_dim, 1);
  net.w2_ = RandomMatrix(config.hidden_dim, config.hidden_dim, s, &rng);
  net.b2_ = Matrix::Zeros(config.hidden_dim, 1);
  net.wg_ = RandomMatrix(config.hidden_dim, config.num_dialects, s, &rng);
  net.bg_ = Matrix::Zeros(config.hidden_dim, 1);
  for (int d = 0; d < config.num_dialects; ++d) {
    net.head_w_.push_back(
        RandomMatrix(config.num_units, config.hidden_dim, s, &rng));
    net.head_b_.push_back(Matrix::Zeros(config.num_units, 1));
  }
  return net;
}

GeoAmNetwork::ForwardTrace GeoAmNetwork::ForwardTraced(
    std::span<const double> features, int dialect) const {
  GEOASR_CHECK(static_cast<int>(features.size()) == config_.feature_dim)
      << "feature dimension mismatch: got " << features.size();
  GEOASR_CHECK(dialect >= 1 && dialect <= config_.num_dialects)
      << "dialect " << dialect << " out of range";
  ForwardTrace trace;
  trace.h1 = Affine(w1_, b1_, features);
  for (double &x : trace.h1) x = std::tanh(x);
  trace.h2 = Affine(w2_, b2_, trace.h1);
  for (double &x : trace.h2) x = std::tanh(x);
  // Geo-vector injection: one-hot dialect through an affine map, added to
  // the body output.
  trace.z = trace.h2;
  for (int r = 0; r < config_.hidden_dim; ++r) {
    trace.z[r] += wg_.At(r, dialect - 1) + bg_.v[r];
  }
  trace.probs = Affine(head_w_[dialect - 1], head_b_[dialect - 1], trace.z);
  SoftmaxInPlace(&trace.probs);
  return trace;
}

std::vector<double> GeoAmNetwork::Forward(std::span<const double> features,
                                          int dialect) const {
  return ForwardTraced(features, dialect).probs;
}

std::vector<std::string> GeoAmNetwork::GroupNames() const {
  std::vector<std::string> names{"body.l1", "body.l2", "geo"};
  for (int d = 1; d <= config_.num_dialects; ++d) {
    names.push_back("head." + std::to_string(d));
  }
  return names;
}

void GeoAmNetwork::SetFreezeMask(std::set<std::string> mask) {
  auto names = GroupNames();
  for (const auto &g : mask) {
    GEOASR_CHECK(std::find(names.begin(), names.end(), g) != names.end())
        << "unknown parameter group in freeze mask: " << g;
  }
  freeze_mask_ = std::move(mask);
}

std::vector<Matrix *> GeoAmNetwork::ParametersOf(const std::string &group) {
  if (group == "body.l1") return {&w1_, &b1_};
  if (group == "body.l2") return {&w2_, &b2_};
  if (group == "geo") return {&wg_, &bg_};
  if (group.rfind("head.", 0) == 0) {
    int d = std::stoi(group.substr(5));
    GEOASR_CHECK(d >= 1 && d <= config_.num_dialects)
        << "unknown head group " << group;
    return {&head_w_[d - 1], &head_b_[d - 1]};
  }
  GEOASR_ERROR() << "unknown parameter group " << group;
}

std::vector<const Matrix *> GeoAmNetwork::ParametersOf(
    const std::string &group) const {
  auto mutable_params =
      const_cast<GeoAmNetwork *>(this)->ParametersOf(group);
  return {mutable_params.begin(), mutable_params.end()};
}

std::map<std::string, std::vector<Matrix>> GeoAmNetwork::Gradients(
    const amsim::ToyBatch &batch) const {
  GEOASR_CHECK(batch.Size() > 0) << "empty batch";
  GEOASR_CHECK(batch.feature_dim == config_.feature_dim)
      << "batch feature dimension mismatch";
  std::map<std::string, std::vector<Matrix>> grads;
  for (const auto &name : GroupNames()) {
    std::vector<Matrix> shapes;
    for (const Matrix *p : ParametersOf(name)) {
      shapes.push_back(Matrix::Zeros(p->rows, p->cols));
    }
    grads[name] = std::move(shapes);
  }
  const double inv_n = 1.0 / static_cast<double>(batch.Size());
  for (size_t i = 0; i < batch.Size(); ++i) {
    int dialect = batch.regions[i];
    int label = batch.labels[i];
    ForwardTrace t = ForwardTraced(batch.features[i], dialect);

    // d loss / d logits, mean-reduced.
    std::vector<double> dlogits = t.probs;
    dlogits[label] -= 1.0;
    for (double &x : dlogits) x *= inv_n;

    std::string head = "head." + std::to_string(dialect);
    Matrix &dhw = grads[head][0];
    Matrix &dhb = grads[head][1];
    const Matrix &hw = head_w_[dialect - 1];
    std::vector<double> dz(config_.hidden_dim, 0.0);
    for (int r = 0; r < config_.num_units; ++r) {
      dhb.v[r] += dlogits[r];
      for (int c = 0; c < config_.hidden_dim; ++c) {
        dhw.At(r, c) += dlogits[r] * t.z[c];
        dz[c] += hw.At(r, c) * dlogits[r];
      }
    }

    Matrix &dwg = grads["geo"][0];
    Matrix &dbg = grads["geo"][1];
    for (int r = 0; r < config_.hidden_dim; ++r) {
      dwg.At(r, dialect - 1) += dz[r];
      dbg.v[r] += dz[r];
    }

    // Through the second tanh layer.
    std::vector<double> da2(config_.hidden_dim);
    for (int r = 0; r < config_.hidden_dim; ++r) {
      da2[r] = dz[r] * (1.0 - t.h2[r] * t.h2[r]);
    }
    Matrix &dw2 = grads["body.l2"][0];
    Matrix &db2 = grads["body.l2"][1];
    std::vector<double> dh1(config_.hidden_dim, 0.0);
    for (int r = 0; r < config_.hidden_dim; ++r) {
      db2.v[r] += da2[r];
      for (int c = 0; c < config_.hidden_dim; ++c) {
        dw2.At(r, c) += da2[r] * t.h1[c];
        dh1[c] += w2_.At(r, c) * da2[r];
      }
    }

    std::vector<double> da1(config_.hidden_dim);
    for (int r = 0; r < config_.hidden_dim; ++r) {
      da1[r] = dh1[r] * (1.0 - t.h1[r] * t.h1[r]);
    }
    Matrix &dw1 = grads["body.l1"][0];
    Matrix &db1 = grads["body.l1"][1];
    for (int r = 0; r < config_.hidden_dim; ++r) {
      db1.v[r] += da1[r];
      for (int c = 0; c < config_.feature_dim; ++c) {
        dw1.At(r, c) += da1[r] * batch.features[i][c];
      }
    }
  }
  return grads;
}

double GeoAmNetwork::TrainStep(const amsim::ToyBatch &batch,
                               double learning_rate) {
  GEOASR_CHECK(batch.Size() > 0) << "empty batch";
  GEOASR_CHECK(learning_rate >= 0) << "negative learning rate";
  double loss = Loss(batch);
  auto grads = Gradients(batch);
  for (const auto &name : GroupNames()) {
    if (freeze_mask_.count(name) != 0) continue;
    auto params = ParametersOf(name);
    const auto &group_grads = grads.at(name);
    for (size_t p = 0; p < params.size(); ++p) {
      for (size_t k = 0; k < params[p]->v.size(); ++k) {
        params[p]->v[k] -= learning_rate * group_grads[p].v[k];
      }
    }
  }
  return loss;
}

void GeoAmNetwork::AdaptDialect(int dialect, const amsim::ToyBatch &batch,
                                double learning_rate, int steps) {
  GEOASR_CHECK(dialect >= 1 && dialect <= config_.num_dialects)
      << "dialect " << dialect << " out of range";
  std::set<std::string> saved = freeze_mask_;
  std::set<std::string> mask;
  std::string keep = "head." + std::to_string(dialect);
  for (const auto &name : GroupNames()) {
    if (name != keep) mask.insert(name);
  }
  SetFreezeMask(std::move(mask));
  for (int s = 0; s < steps; ++s) TrainStep(batch, learning_rate);
  SetFreezeMask(std::move(saved));
}

double GeoAmNetwork::Loss(const amsim::ToyBatch &batch) const {
  GEOASR_CHECK(batch.Size() > 0) << "empty batch";
  double total = 0.0;
  for (size_t i = 0; i < batch.Size(); ++i) {
    auto probs = Forward(batch.features[i], batch.regions[i]);
    total += -std::log(std::max(probs[batch.labels[i]], 1e-300));
  }
  return total / static_cast<double>(batch.Size());
}

double GeoAmNetwork::Accuracy(const amsim::ToyBatch &batch) const {
  GEOASR_CHECK(batch.Size() > 0) << "empty batch";
  size_t correct = 0;
  for (size_t i = 0; i < batch.Size(); ++i) {
    auto probs = Forward(batch.features[i], batch.regions[i]);
    int best = static_cast<int>(
        std::max_element(probs.begin(), probs.end()) - probs.begin());
    if (best == batch.labels[i]) ++correct;
  }
  return static_cast<double>(correct) / batch.Size();
}

std::string GeoAmNetwork::ToText() const {
  std::ostringstream out;
  out << "geoam\t" << config_.feature_dim << "\t" << config_.hidden_dim
      << "\t" << config_.num_units << "\t" << config_.num_dialects << "\n";
  char buf[64];
  for (const auto &name : GroupNames()) {
    auto params = ParametersOf(name);
    for (size_t p = 0; p < params.size(); ++p) {
      out << "param\t" << name << "." << (p == 0 ? "w" : "b") << "\t"
          << params[p]->rows << "\t" << params[p]->cols << "\t";
      for (size_t k = 0; k < params[p]->v.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g", params[p]->v[k]);
        out << (k > 0 ? " " : "") << buf;
      }
      out << "\n";
    }
  }
  for (const auto &name : freeze_mask_) out << "freeze\t" << name << "\n";
  return out.str();
}

GeoAmNetwork GeoAmNetwork::FromText(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  GEOASR_CHECK(static_cast<bool>(std::getline(in, line)))
      << "empty checkpoint";
  auto header = SplitTabs(StripLineEnding(line));
  long long fd = 0, hd = 0, nu = 0, ndial = 0;
  GEOASR_CHECK(header.size() == 5 && header[0] == "geoam" &&
               ParseInt(header[1], &fd) && ParseInt(header[2], &hd) &&
               ParseInt(header[3], &nu) && ParseInt(header[4], &ndial))
      << "bad checkpoint header: " << line;
  GeoAmConfig config;
  config.feature_dim = static_cast<int>(fd);
  config.hidden_dim = static_cast<int>(hd);
  config.num_units = static_cast<int>(nu);
  config.num_dialects = static_cast<int>(ndial);
  GeoAmNetwork net = Init(config);
  std::set<std::string> freeze;
  while (std::getline(in, line)) {
    line = StripLineEnding(line);
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    if (fields[0] == "freeze") {
      GEOASR_CHECK(fields.size() == 2) << "bad freeze line: " << line;
      freeze.insert(fields[1]);
      continue;
    }
    GEOASR_CHECK(fields[0] == "param" && fields.size() == 5)
        << "bad checkpoint line: " << line;
    std::string full = fields[1];
    auto dot = full.rfind('.');
    GEOASR_CHECK(dot != std::string::npos) << "bad parameter name " << full;
    std::string group = full.substr(0, dot);
    std::string which = full.substr(dot + 1);
    long long rows = 0, cols = 0;
    GEOASR_CHECK(ParseInt(fields[2], &rows) && ParseInt(fields[3], &cols))
        << "bad parameter shape in: " << line;
    auto params = net.ParametersOf(group);
    Matrix *target = which == "w" ? params[0] : params[1];
    GEOASR_CHECK(target->rows == rows && target->cols == cols)
        << "parameter shape mismatch for " << full;
    auto values = SplitFields(fields[4], " ");
    GEOASR_CHECK(values.size() == target->v.size())
        << "parameter value count mismatch for " << full;
    for (size_t k = 0; k < values.size(); ++k) {
      GEOASR_CHECK(ParseDouble(values[k], &target->v[k]))
          << "bad parameter value in " << full;
    }
  }
  net.SetFreezeMask(std::move(freeze));
  return net;
}

}  // namespace geoam
}  // namespace geoasr
