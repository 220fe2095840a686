// tests/ngram_test.cc
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
#include <string>
#include <vector>

#include "doctest.h"

#include "base/rng.h"
#include "ngram/arpa.h"
#include "ngram/model.h"
#include "ngram/trainer.h"
#include "oracles/arpa_interp.h"

namespace geoasr {
namespace ngram {
namespace {

using Corpus = std::vector<std::vector<std::string>>;

double ProbOf(const NGramModel &m, const std::vector<std::string> &history,
              const std::string &word) {
  return std::pow(10.0, m.LogProb(history, word));
}

// Total conditional mass over the full vocabulary (without <s>) for the
// given history, evaluated through backoff.
double TotalMass(const NGramModel &m, const std::vector<TokenId> &history) {
  double total = 0.0;
  for (TokenId w = 0; w < static_cast<TokenId>(m.Vocab().Size()); ++w) {
    if (w == Vocabulary::kBos) continue;
    total += std::pow(10.0, m.LogProbIds(history, w));
  }
  return total;
}

// Random sentences with a long-tailed word distribution, for cutoff and
// normalization checks.
Corpus SyntheticCorpus(int num_sentences, int vocab_size, uint64_t seed) {
  Rng rng(seed);
  std::vector<double> weights(vocab_size);
  for (int i = 0; i < vocab_size; ++i) weights[i] = 1.0 / (1 + i);
  Corpus corpus;
  corpus.reserve(num_sentences);
  for (int s = 0; s < num_sentences; ++s) {
    int len = 2 + static_cast<int>(rng.NextIndex(5));
    std::vector<std::string> sentence;
    for (int i = 0; i < len; ++i) {
      sentence.push_back("w" + std::to_string(rng.NextWeighted(weights)));
    }
    corpus.push_back(std::move(sentence));
  }
  return corpus;
}

TEST_CASE("two-sentence corpus matches the hand-computed KN reference") {
  Corpus corpus{{"a", "b"}, {"a", "c"}};
  NGramModel m = Train(corpus, 2, {0, 0});

  // Unigram level: continuation counts a:1 b:1 c:1 </s>:2, five event
  // types, discounts D1=0.6 D2=2.0, gamma=0.76.
  CHECK(ProbOf(m, {}, "a") == doctest::Approx(0.232).epsilon(1e-9));
  CHECK(ProbOf(m, {}, "b") == doctest::Approx(0.232).epsilon(1e-9));
  CHECK(ProbOf(m, {}, "c") == doctest::Approx(0.232).epsilon(1e-9));
  CHECK(ProbOf(m, {}, "</s>") == doctest::Approx(0.152).epsilon(1e-9));
  CHECK(ProbOf(m, {}, "<unk>") == doctest::Approx(0.152).epsilon(1e-9));

  // Bigram level: D1=2/3, D2=2.
  CHECK(ProbOf(m, {"a"}, "b") ==
        doctest::Approx(1.0 / 6 + (2.0 / 3) * 0.232).epsilon(1e-9));
  CHECK(ProbOf(m, {"a"}, "c") == ProbOf(m, {"a"}, "b"));
  CHECK(ProbOf(m, {"<s>"}, "a") == doctest::Approx(0.232).epsilon(1e-9));
  CHECK(ProbOf(m, {"b"}, "</s>") ==
        doctest::Approx(1.0 / 3 + (2.0 / 3) * 0.152).epsilon(1e-9));

  // Backoff weights.
  TokenId a = m.Vocab().Find("a");
  const NGramEntry *ea = m.FindEntry(std::vector<TokenId>{a});
  REQUIRE(ea != nullptr);
  CHECK(std::pow(10.0, ea->log10_bow) ==
        doctest::Approx(2.0 / 3).epsilon(1e-9));

  // Backoff identity: (b, a) is unseen, so P(a|b) = bow(b) * P(a).
  TokenId b = m.Vocab().Find("b");
  const NGramEntry *eb = m.FindEntry(std::vector<TokenId>{b});
  CHECK(m.LogProb(std::vector<std::string>{"b"}, "a") ==
        doctest::Approx(eb->log10_bow + m.LogProb({}, "a")).epsilon(1e-12));

  // Normalization over the full vocabulary for every stored context.
  CHECK(TotalMass(m, {}) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(TotalMass(m, {a}) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(TotalMass(m, {b}) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(TotalMass(m, {Vocabulary::kBos}) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("trainer rejects bad inputs") {
  CHECK_THROWS(Train(Corpus{}, 2, {0, 0}));
  CHECK_THROWS(Train(Corpus{{"a"}}, 2, {0}));
  CHECK_THROWS(Train(Corpus{{"a"}}, 0, {}));
}

TEST_CASE("larger cutoffs store strictly fewer n-grams") {
  Corpus corpus = SyntheticCorpus(1000, 60, 17);
  NGramModel large = Train(corpus, 5, {0, 3, 5, 10, 15});
  NGramModel small = Train(corpus, 5, {0, 2, 2, 2, 2});
  CHECK(large.TotalEntries() < small.TotalEntries());

  // Monotonicity order by order.
  for (int k = 2; k <= 5; ++k) {
    CHECK(large.NumEntries(k) <= small.NumEntries(k));
  }
}

TEST_CASE("stored n-grams respect their cutoffs") {
  Corpus corpus = SyntheticCorpus(500, 40, 3);
  std::vector<int> cutoffs{0, 2, 2, 3, 3};
  NGramModel m = Train(corpus, 5, cutoffs);

  CountTable counts(5);
  for (const auto &sentence : corpus) {
    std::vector<TokenId> ids;
    for (const auto &t : sentence) ids.push_back(m.Vocab().IdOrUnk(t));
    counts.AddSentence(ids);
  }
  // A stored n-gram either clears its cutoff or is the prefix of a stored
  // longer n-gram (reserved unigrams are always kept).
  for (int k = 5; k >= 2; --k) {
    for (const auto &gram : m.SortedNGrams(k)) {
      bool is_prefix = false;
      if (k < 5) {
        for (const auto &longer : m.SortedNGrams(k + 1)) {
          if (std::equal(gram.begin(), gram.end(), longer.begin())) {
            is_prefix = true;
            break;
          }
        }
      }
      if (!is_prefix) CHECK(counts.RawCount(gram) > cutoffs[k - 1]);
    }
  }
}

TEST_CASE("normalization holds for every stored context at orders 2..5") {
  Corpus corpus = SyntheticCorpus(300, 30, 11);
  for (int order : {2, 3, 5}) {
    NGramModel m =
        Train(corpus, order, std::vector<int>(order, 0));
    for (int k = 0; k < order; ++k) {
      if (k == 0) {
        CHECK(TotalMass(m, {}) == doctest::Approx(1.0).epsilon(1e-6));
        continue;
      }
      for (const auto &context : m.SortedNGrams(k)) {
        double mass = TotalMass(m, context);
        INFO("order ", order, " context size ", k);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("queries match the reference ARPA interpreter") {
  Corpus corpus = SyntheticCorpus(400, 50, 23);
  NGramModel trained = Train(corpus, 4, {0, 0, 2, 2});
  std::string arpa = ToArpa(trained);
  NGramModel m = FromArpa(arpa);
  testing::ArpaInterpreter oracle(arpa);

  Rng rng(99);
  std::vector<std::string> vocab(oracle.Vocab().begin(),
                                 oracle.Vocab().end());
  for (int probe = 0; probe < 2000; ++probe) {
    size_t hist_len = rng.NextIndex(5);
    std::vector<std::string> history;
    for (size_t i = 0; i < hist_len; ++i) {
      history.push_back(vocab[rng.NextIndex(vocab.size())]);
    }
    const std::string &word = vocab[rng.NextIndex(vocab.size())];
    double got = m.LogProb(history, word);
    double want = oracle.LogProb(history, word);
    CHECK(got == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("ARPA round-trip is byte-stable and entry-exact") {
  Corpus corpus = SyntheticCorpus(200, 25, 7);
  NGramModel trained = Train(corpus, 3, {0, 0, 0});
  std::string first = ToArpa(trained);
  NGramModel reread = FromArpa(first);
  std::string second = ToArpa(reread);
  CHECK(first == second);

  for (int k = 1; k <= 3; ++k) {
    REQUIRE(reread.NumEntries(k) == trained.NumEntries(k));
  }
}

TEST_CASE("ARPA count mismatch is rejected") {
  std::string bad =
      "\\data\\\n"
      "ngram 1=3\n"
      "ngram 2=5\n"
      "\n"
      "\\1-grams:\n"
      "-0.5\t<s>\t0.0\n"
      "-0.5\ta\t0.0\n"
      "-0.5\t</s>\t0.0\n"
      "\n"
      "\\2-grams:\n"
      "-0.3\t<s> a\n"
      "-0.3\ta a\n"
      "-0.3\ta </s>\n"
      "-0.3\t<s> </s>\n"
      "\n"
      "\\end\\\n";
  CHECK_THROWS(FromArpa(bad));
}

TEST_CASE("ARPA with non-numeric fields is rejected") {
  std::string bad =
      "\\data\\\n"
      "ngram 1=1\n"
      "\n"
      "\\1-grams:\n"
      "oops\ta\n"
      "\n"
      "\\end\\\n";
  CHECK_THROWS(FromArpa(bad));
}

TEST_CASE("hand-written unigram ARPA answers queries as written") {
  std::string text =
      "\\data\\\n"
      "ngram 1=3\n"
      "\n"
      "\\1-grams:\n"
      "-0.3010300\tred\n"
      "-0.6020600\tgreen\n"
      "-0.9030900\tblue\n"
      "\n"
      "\\end\\\n";
  NGramModel m = FromArpa(text);
  CHECK(m.LogProb({}, "red") == doctest::Approx(-0.30103).epsilon(1e-12));
  CHECK(m.LogProb({}, "green") == doctest::Approx(-0.60206).epsilon(1e-12));
  CHECK(m.LogProb({}, "blue") == doctest::Approx(-0.90309).epsilon(1e-12));
}

TEST_CASE("bigram subset keeps unigram and bigram probabilities") {
  Corpus corpus = SyntheticCorpus(300, 30, 41);
  NGramModel five = Train(corpus, 5, {0, 0, 0, 2, 2});
  NGramModel sub = MakeBigramSubset(five);

  CHECK(sub.Order() == 2);
  CHECK(sub.NumEntries(1) == five.NumEntries(1));
  CHECK(sub.NumEntries(2) == five.NumEntries(2));
  for (const auto &gram : five.SortedNGrams(2)) {
    CHECK(sub.FindEntry(gram)->log10_prob ==
          five.FindEntry(gram)->log10_prob);
  }
  // Renormalized: every retained context sums to one.
  CHECK(TotalMass(sub, {}) == doctest::Approx(1.0).epsilon(1e-6));
  for (const auto &context : sub.SortedNGrams(1)) {
    CHECK(TotalMass(sub, context) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("bigram subset of an order-2 model is identical") {
  Corpus corpus = SyntheticCorpus(200, 20, 5);
  NGramModel two = Train(corpus, 2, {0, 0});
  NGramModel sub = MakeBigramSubset(two);
  CHECK(ToArpa(sub) == ToArpa(two));
}

TEST_CASE("bigram subset rejects order-1 input") {
  Corpus corpus{{"a", "b"}};
  NGramModel uni = Train(corpus, 1, {0});
  CHECK_THROWS(MakeBigramSubset(uni));
}

TEST_CASE("unigram cutoff truncates the vocabulary to <unk>") {
  Corpus corpus{{"x", "x", "x", "rare"}, {"x", "x"}};
  NGramModel m = Train(corpus, 2, {1, 0});
  CHECK(m.Vocab().Find("rare") == -1);
  CHECK(m.Vocab().Find("x") != -1);
  // <unk> absorbed the truncated word and has real probability.
  CHECK(ProbOf(m, {}, "rare") > 1e-7);
  CHECK(TotalMass(m, {}) == doctest::Approx(1.0).epsilon(1e-6));
}

}  // namespace
}  // namespace ngram
}  // namespace geoasr
