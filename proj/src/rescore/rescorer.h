// rescore/rescorer.h
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
// Pluggable context-conditional character probability providers for the
// second pass.  The default is a character n-gram adapter; neural models
// implement the same batch interface.

#ifndef GEOASR_RESCORE_RESCORER_H_
#define GEOASR_RESCORE_RESCORER_H_

#include <memory>
#include <string>
#include <vector>

#include "ngram/model.h"

namespace geoasr {
namespace rescore {

class Rescorer {
 public:
  virtual ~Rescorer() = default;

  // P(chars[i] | chars[0..i)) for every position, plus one trailing
  // end-of-sentence probability; values in (0, 1].  Batch-oriented so
  // implementations can score a whole hypothesis at once.
  virtual std::vector<double> Probabilities(
      const std::vector<std::string> &chars) const = 0;
};

// Character n-gram adapter over module ngram queries.
class NgramRescorer : public Rescorer {
 public:
  explicit NgramRescorer(std::shared_ptr<const ngram::NGramModel> model)
      : model_(std::move(model)) {}

  std::vector<double> Probabilities(
      const std::vector<std::string> &chars) const override;

 private:
  std::shared_ptr<const ngram::NGramModel> model_;
};

// Context-free 1/V provider, mostly for tests and ablations.
class UniformRescorer : public Rescorer {
 public:
  explicit UniformRescorer(size_t vocabulary_size)
      : probability_(1.0 / static_cast<double>(vocabulary_size)) {}

  std::vector<double> Probabilities(
      const std::vector<std::string> &chars) const override {
    return std::vector<double>(chars.size() + 1, probability_);
  }

 private:
  double probability_;
};

}  // namespace rescore
}  // namespace geoasr

#endif  // GEOASR_RESCORE_RESCORER_H_
