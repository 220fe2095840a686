// rescore/second_pass.cc
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

#include "rescore/second_pass.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "base/error.h"
#include "base/stringutil.h"

namespace geoasr {
namespace rescore {

namespace {
constexpr double kLn10 = 2.302585092994045684;

double ModelProb(const ngram::NGramModel &model,
                 const std::vector<std::string> &history,
                 const std::string &token) {
  return std::pow(10.0, model.LogProb(history, token));
}

}  // namespace

std::vector<double> NgramRescorer::Probabilities(
    const std::vector<std::string> &chars) const {
  std::vector<double> probs;
  probs.reserve(chars.size() + 1);
  std::vector<std::string> history{"<s>"};
  for (const auto &c : chars) {
    probs.push_back(ModelProb(*model_, history, c));
    history.push_back(c);
  }
  probs.push_back(ModelProb(*model_, history, "</s>"));
  return probs;
}

void InterpolationConfig::Validate() const {
  GEOASR_CHECK(lambda >= 0 && lambda <= 1) << "lambda out of [0,1]";
  GEOASR_CHECK(alpha >= 0 && beta >= 0 && alpha + beta <= 1)
      << "alpha/beta must be nonnegative with alpha+beta <= 1";
  GEOASR_CHECK(gamma >= 0 && gamma <= 1) << "gamma out of [0,1]";
}

double SecondPassProb(double p_base, double p_rescorer, double p_geo,
                      const InterpolationConfig &config) {
  config.Validate();
  return config.alpha * p_base + config.beta * p_rescorer +
         (1.0 - config.alpha - config.beta) * p_geo;
}

std::vector<double> CombinePasses(const std::vector<double> &pass1,
                                  const std::vector<double> &pass2,
                                  double gamma) {
  GEOASR_CHECK(pass1.size() == pass2.size())
      << "token count mismatch between passes: " << pass1.size() << " vs "
      << pass2.size();
  std::vector<double> combined(pass1.size());
  for (size_t i = 0; i < pass1.size(); ++i) {
    combined[i] = gamma * pass1[i] + (1.0 - gamma) * pass2[i];
  }
  return combined;
}

std::vector<RescoredHypothesis> RescoreNBest(
    const std::vector<decoder::TextHypothesis> &hyps,
    const RescoreModels &models, const InterpolationConfig &config,
    double lm_scale) {
  config.Validate();
  GEOASR_CHECK(models.word_base && models.char_base && models.rescorer &&
               models.lexicon)
      << "rescoring needs word/char baselines, a rescorer and a lexicon";
  const ngram::NGramModel *word_geo =
      models.word_geo ? models.word_geo : models.word_base;
  const ngram::NGramModel *char_geo =
      models.char_geo ? models.char_geo : models.char_base;

  std::vector<RescoredHypothesis> out;
  out.reserve(hyps.size());
  for (const decoder::TextHypothesis &h : hyps) {
    // First-pass word probabilities (the same mixture the decoder charges),
    // expanded to characters
    // with the word probability on the first character.
    std::vector<std::string> chars;
    std::vector<double> pass1;
    std::vector<std::string> history{"<s>"};
    for (const auto &word : h.words) {
      double pb = ModelProb(*models.word_base, history, word);
      double pg = ModelProb(*word_geo, history, word);
      double p1 = config.lambda * pb + (1.0 - config.lambda) * pg;
      auto it = models.lexicon->entries.find(word);
      GEOASR_CHECK(it != models.lexicon->entries.end())
          << "hypothesis word missing from lexicon: " << word;
      const auto &units = it->second.front();
      for (size_t u = 0; u < units.size(); ++u) {
        chars.push_back(units[u]);
        pass1.push_back(u == 0 ? p1 : 1.0);
      }
      history.push_back(word);
    }
    {
      double pb = ModelProb(*models.word_base, history, "</s>");
      double pg = ModelProb(*word_geo, history, "</s>");
      pass1.push_back(config.lambda * pb + (1.0 - config.lambda) * pg);
    }

    // Second pass over characters (with the end-of-sentence slot).
    std::vector<double> rescorer_probs =
        models.rescorer->Probabilities(chars);
    GEOASR_CHECK(rescorer_probs.size() == chars.size() + 1)
        << "rescorer returned " << rescorer_probs.size()
        << " probabilities for " << chars.size() << " characters";
    std::vector<double> pass2;
    pass2.reserve(chars.size() + 1);
    std::vector<std::string> char_history{"<s>"};
    for (size_t i = 0; i < chars.size(); ++i) {
      double pb = ModelProb(*models.char_base, char_history, chars[i]);
      double pl = ModelProb(*char_geo, char_history, chars[i]);
      pass2.push_back(SecondPassProb(pb, rescorer_probs[i], pl, config));
      char_history.push_back(chars[i]);
    }
    {
      double pb = ModelProb(*models.char_base, char_history, "</s>");
      double pl = ModelProb(*char_geo, char_history, "</s>");
      pass2.push_back(
          SecondPassProb(pb, rescorer_probs.back(), pl, config));
    }

    std::vector<double> combined = CombinePasses(pass1, pass2, config.gamma);
    RescoredHypothesis r;
    r.hyp = h;
    r.second_pass_cost = 0.0;
    for (double p : pass2) r.second_pass_cost += -std::log(p);
    double combined_lm = 0.0;
    for (double p : combined) combined_lm += -std::log(p);
    r.combined_cost = h.acoustic_cost + lm_scale * combined_lm;
    out.push_back(std::move(r));
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const RescoredHypothesis &a,
                      const RescoredHypothesis &b) {
                     if (a.combined_cost != b.combined_cost) {
                       return a.combined_cost < b.combined_cost;
                     }
                     return a.hyp.rank < b.hyp.rank;
                   });
  for (size_t i = 0; i < out.size(); ++i) {
    out[i].rank_delta = out[i].hyp.rank - static_cast<int>(i + 1);
  }
  return out;
}

std::string RescoredToText(const std::vector<RescoredHypothesis> &hyps) {
  std::ostringstream out;
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return std::string(buf);
  };
  int rank = 1;
  for (const auto &r : hyps) {
    out << r.hyp.utt_id << "\t" << rank++ << "\t" << r.hyp.province_id << "\t"
        << fmt(r.hyp.total_cost) << "\t" << fmt(r.hyp.acoustic_cost) << "\t"
        << fmt(r.hyp.lm_cost) << "\t" << fmt(r.combined_cost) << "\t"
        << r.rank_delta << "\t" << JoinFields(r.hyp.words, " ") << "\n";
  }
  return out.str();
}

std::vector<RescoredHypothesis> RescoredFromText(const std::string &text) {
  std::vector<RescoredHypothesis> out;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripLineEnding(line);
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    GEOASR_CHECK(fields.size() == 9)
        << "bad rescored line " << line_no << ": " << line;
    RescoredHypothesis r;
    long long rank = 0, province = 0, delta = 0;
    GEOASR_CHECK(ParseInt(fields[1], &rank) && ParseInt(fields[2], &province) &&
                 ParseDouble(fields[3], &r.hyp.total_cost) &&
                 ParseDouble(fields[4], &r.hyp.acoustic_cost) &&
                 ParseDouble(fields[5], &r.hyp.lm_cost) &&
                 ParseDouble(fields[6], &r.combined_cost) &&
                 ParseInt(fields[7], &delta))
        << "bad numeric field in rescored line " << line_no;
    r.hyp.utt_id = fields[0];
    r.hyp.rank = static_cast<int>(rank);
    r.hyp.province_id = static_cast<int>(province);
    r.rank_delta = static_cast<int>(delta);
    r.hyp.words = SplitFields(fields[8], " ");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rescore
}  // namespace geoasr
