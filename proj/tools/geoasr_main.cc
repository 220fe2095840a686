// tools/geoasr_main.cc
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
// Command-line driver for the geography-aware decoding pipeline:
//   gen-corpus   synthetic POI corpora, manifests and emissions
//   train-lm     Kneser-Ney models (baseline, per-province, rescorer)
//   build-graph  lexicon and bigram-grammar transducers
//   decode       first-pass decoding with on-demand geo model selection
//   rescore      second-pass character-level rescoring
//   eval         CER reports grouped by province, region or accent

#include <filesystem>
#include <iostream>
#include <map>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"

#include "amsim/confusion.h"
#include "amsim/corpus_gen.h"
#include "base/fileio.h"
#include "batch/pipeline.h"
#include "decoder/beam_decoder.h"
#include "eval/report.h"
#include "geo/geolm_store.h"
#include "geo/province_table.h"
#include "graph/lexicon.h"
#include "graph/ngram_fst.h"
#include "ngram/arpa.h"
#include "ngram/trainer.h"
#include "rescore/second_pass.h"
#include "wfst/text_io.h"

namespace geoasr {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct PipelineConfig {
  std::string data_dir = "out";
  std::string region_file = "data/provinces.tsv";
  std::vector<int> provinces{17, 34, 28, 25, 12, 20, 6, 24, 1, 10};
  std::vector<int> sizes;
  double homophone_rate = 0.1;
  double tail_exponent = 1.0;
  uint64_t seed = 1;
  std::string accent = "medium";
  double temperature = 0.35;
  int dev_per_province = 40;
  int test_per_province = 200;
  int word_order = 5;
  int char_order = 5;
  std::vector<int> baseline_cutoffs{0, 3, 5, 10, 15};
  std::vector<int> geo_cutoffs{0, 2, 2, 2, 2};
  double lambda = 0.5;
  double alpha = 0.4;
  double beta = 0.3;
  double gamma = 0.5;
  double beam = 14.0;
  int nbest = 20;
  double lm_scale = 1.0;
  int threads = 0;

  void Validate() const {
    rescore::InterpolationConfig ic{lambda, alpha, beta, gamma};
    ic.Validate();
    GEOASR_CHECK(beam > 0) << "beam must be positive";
    GEOASR_CHECK(nbest >= 1) << "nbest must be >= 1";
    GEOASR_CHECK(lm_scale > 0) << "lm scale must be positive";
    GEOASR_CHECK(!provinces.empty()) << "no provinces configured";
    GEOASR_CHECK(static_cast<int>(baseline_cutoffs.size()) == word_order)
        << "baseline cutoff list must match the word order";
    GEOASR_CHECK(static_cast<int>(geo_cutoffs.size()) == word_order)
        << "geo cutoff list must match the word order";
    amsim::AccentLevelFromName(accent);  // throws on bad names
  }

  std::string Path(const std::string &relative) const {
    return (fs::path(data_dir) / relative).string();
  }
};

void MaybeLoad(const json &j, const char *key, std::vector<int> *out) {
  if (j.contains(key)) *out = j.at(key).get<std::vector<int>>();
}

template <typename T>
void MaybeLoad(const json &j, const char *key, T *out) {
  if (j.contains(key)) *out = j.at(key).get<T>();
}

PipelineConfig LoadConfig(const std::string &path) {
  PipelineConfig config;
  if (path.empty()) return config;
  json j = json::parse(ReadFile(path));
  MaybeLoad(j, "data_dir", &config.data_dir);
  MaybeLoad(j, "region_file", &config.region_file);
  MaybeLoad(j, "provinces", &config.provinces);
  MaybeLoad(j, "sizes", &config.sizes);
  MaybeLoad(j, "homophone_rate", &config.homophone_rate);
  MaybeLoad(j, "tail_exponent", &config.tail_exponent);
  MaybeLoad(j, "seed", &config.seed);
  MaybeLoad(j, "accent", &config.accent);
  MaybeLoad(j, "temperature", &config.temperature);
  MaybeLoad(j, "dev_per_province", &config.dev_per_province);
  MaybeLoad(j, "test_per_province", &config.test_per_province);
  MaybeLoad(j, "word_order", &config.word_order);
  MaybeLoad(j, "char_order", &config.char_order);
  MaybeLoad(j, "baseline_cutoffs", &config.baseline_cutoffs);
  MaybeLoad(j, "geo_cutoffs", &config.geo_cutoffs);
  MaybeLoad(j, "lambda", &config.lambda);
  MaybeLoad(j, "alpha", &config.alpha);
  MaybeLoad(j, "beta", &config.beta);
  MaybeLoad(j, "gamma", &config.gamma);
  MaybeLoad(j, "beam", &config.beam);
  MaybeLoad(j, "nbest", &config.nbest);
  MaybeLoad(j, "lm_scale", &config.lm_scale);
  MaybeLoad(j, "threads", &config.threads);
  return config;
}

std::vector<int> ConfiguredSizes(const PipelineConfig &config) {
  if (!config.sizes.empty()) {
    GEOASR_CHECK(config.sizes.size() == config.provinces.size())
        << "sizes list must be parallel to provinces";
    return config.sizes;
  }
  // Emulate the spread of per-province corpus sizes at reduced scale.
  std::vector<int> sizes;
  for (size_t i = 0; i < config.provinces.size(); ++i) {
    sizes.push_back(300 + static_cast<int>(i) * 260);
  }
  return sizes;
}

graph::Lexicon LoadLexicon(const PipelineConfig &config) {
  return graph::ParseLexicon(ReadLines(config.Path("lexicon.txt")));
}

// Characters of a word sequence through the lexicon (first pronunciation).
std::vector<std::string> WordsToUnits(const graph::Lexicon &lexicon,
                                      const std::vector<std::string> &words) {
  std::vector<std::string> units;
  for (const auto &w : words) {
    auto it = lexicon.entries.find(w);
    GEOASR_CHECK(it != lexicon.entries.end())
        << "word missing from lexicon: " << w;
    const auto &pron = it->second.front();
    units.insert(units.end(), pron.begin(), pron.end());
  }
  return units;
}

// ---------------------------------------------------------------------------
// gen-corpus

int CmdGenCorpus(const PipelineConfig &config) {
  geo::ProvinceTable table = geo::ProvinceTable::FromFile(config.region_file);
  amsim::CorpusOptions options;
  options.provinces = config.provinces;
  options.sizes = ConfiguredSizes(config);
  options.homophone_rate = config.homophone_rate;
  options.tail_exponent = config.tail_exponent;
  options.seed = config.seed;
  options.dev_per_province = config.dev_per_province;
  options.test_per_province = config.test_per_province;
  amsim::SyntheticCorpus corpus = amsim::GenerateCorpus(options, table);

  fs::create_directories(config.Path("emissions"));
  WriteFile(config.Path("corpus.tsv"), amsim::NamesToText(corpus.names));
  WriteFile(config.Path("lexicon.txt"), graph::LexiconToText(corpus.lexicon));
  WriteFile(config.Path("homophones.txt"),
            amsim::HomophonesToText(corpus.homophone_groups));
  WriteFile(config.Path("dev.tsv"), amsim::ManifestToText(corpus.dev));
  WriteFile(config.Path("test.tsv"), amsim::ManifestToText(corpus.test));

  // Emissions for both splits, accent-confused per dialect region.
  auto unit_syms = graph::BuildUnitSymbols(corpus.lexicon);
  amsim::AccentLevel level = amsim::AccentLevelFromName(config.accent);
  std::map<int, amsim::ConfusionModel> confusions;
  for (int province : config.provinces) {
    int region = table.Get(province).region;
    if (confusions.count(region) == 0) {
      confusions.emplace(region,
                         amsim::BuildConfusionModel(unit_syms, region, level));
    }
  }
  auto synthesize = [&](const std::vector<amsim::Utterance> &utts,
                        uint64_t salt) {
    std::vector<batch::SynthesisJob> jobs;
    for (size_t i = 0; i < utts.size(); ++i) {
      batch::SynthesisJob job;
      for (const auto &u : WordsToUnits(corpus.lexicon, utts[i].words)) {
        job.units.push_back(unit_syms->Find(u));
      }
      int region = table.Get(utts[i].province).region;
      job.confusion = &confusions.at(region);
      job.temperature = config.temperature;
      job.seed = config.seed + salt;
      job.utterance_index = i;
      jobs.push_back(std::move(job));
    }
    auto emissions =
        batch::SynthesizeBatchParallel(jobs, unit_syms, config.threads);
    for (size_t i = 0; i < utts.size(); ++i) {
      decoder::WriteEmissionFile(
          emissions[i], config.Path("emissions/" + utts[i].id + ".emis"));
    }
  };
  synthesize(corpus.dev, 101);
  synthesize(corpus.test, 202);
  wfst::WriteSymbolTableFile(*unit_syms, config.Path("units.syms"));
  std::cout << "gen-corpus: " << corpus.names.size() << " provinces, "
            << corpus.lexicon.entries.size() << " lexicon words, "
            << corpus.dev.size() << " dev / " << corpus.test.size()
            << " test utterances\n";
  return 0;
}

// ---------------------------------------------------------------------------
// train-lm

std::vector<ngram::WeightedSentence> WordSentences(
    const std::map<int, std::vector<amsim::PoiName>> &names,
    const std::set<int> &provinces) {
  std::vector<ngram::WeightedSentence> out;
  for (const auto &[province, list] : names) {
    if (!provinces.empty() && provinces.count(province) == 0) continue;
    for (const auto &name : list) out.push_back({name.words, name.frequency});
  }
  GEOASR_CHECK(!out.empty()) << "no corpus lines for the requested scope";
  return out;
}

std::vector<ngram::WeightedSentence> CharSentences(
    const std::vector<ngram::WeightedSentence> &words,
    const graph::Lexicon &lexicon) {
  std::vector<ngram::WeightedSentence> out;
  out.reserve(words.size());
  for (const auto &s : words) {
    out.push_back({WordsToUnits(lexicon, s.tokens), s.count});
  }
  return out;
}

void RefreshStoreManifest(const PipelineConfig &config) {
  std::string manifest;
  for (int province = 1; province <= 34; ++province) {
    std::string word_path =
        config.Path("lms/p" + std::to_string(province) + ".word.arpa");
    std::string char_path =
        config.Path("lms/p" + std::to_string(province) + ".char.arpa");
    if (fs::exists(word_path) && fs::exists(char_path)) {
      manifest += std::to_string(province) + "\tp" +
                  std::to_string(province) + ".word.arpa\tp" +
                  std::to_string(province) + ".char.arpa\n";
    }
  }
  WriteFile(config.Path("lms/store.tsv"), manifest);
}

int CmdTrainLm(const PipelineConfig &config, const std::string &scope) {
  // Validate the scope before touching any data.
  if (scope != "baseline" && scope != "all") {
    long long province = 0;
    GEOASR_CHECK(ParseInt(scope, &province) && province >= 1 && province <= 34)
        << "scope must be `baseline`, `all` or a province id, got " << scope;
  }
  auto names = amsim::NamesFromText(ReadFile(config.Path("corpus.tsv")));
  graph::Lexicon lexicon = LoadLexicon(config);
  fs::create_directories(config.Path("lms"));

  auto train_pair = [&](const std::set<int> &provinces,
                        const std::vector<int> &cutoffs,
                        const std::string &stem) {
    auto words = WordSentences(names, provinces);
    ngram::NGramModel word_model =
        ngram::Train(words, config.word_order, cutoffs);
    ngram::WriteArpaFile(word_model, config.Path("lms/" + stem + ".word.arpa"));
    std::vector<int> char_cutoffs = cutoffs;
    char_cutoffs.resize(config.char_order,
                        cutoffs.empty() ? 0 : cutoffs.back());
    ngram::NGramModel char_model = ngram::Train(
        CharSentences(words, lexicon), config.char_order, char_cutoffs);
    ngram::WriteArpaFile(char_model, config.Path("lms/" + stem + ".char.arpa"));
    std::cout << "train-lm: " << stem << " word entries "
              << word_model.TotalEntries() << ", char entries "
              << char_model.TotalEntries() << "\n";
  };

  if (scope == "baseline") {
    train_pair({}, config.baseline_cutoffs, "baseline");
    // The rescorer slot's default model: a pooled character model kept at
    // standard cutoffs, standing in for the neural rescorer.
    auto words = WordSentences(names, {});
    std::vector<int> char_cutoffs(config.char_order, 2);
    char_cutoffs[0] = 0;
    ngram::NGramModel rescorer_model = ngram::Train(
        CharSentences(words, lexicon), config.char_order, char_cutoffs);
    ngram::WriteArpaFile(rescorer_model, config.Path("lms/rescorer.char.arpa"));
  } else if (scope == "all") {
    train_pair({}, config.baseline_cutoffs, "baseline");
    auto words = WordSentences(names, {});
    std::vector<int> char_cutoffs(config.char_order, 2);
    char_cutoffs[0] = 0;
    ngram::NGramModel rescorer_model = ngram::Train(
        CharSentences(words, lexicon), config.char_order, char_cutoffs);
    ngram::WriteArpaFile(rescorer_model, config.Path("lms/rescorer.char.arpa"));
    for (const auto &[province, list] : names) {
      train_pair({province}, config.geo_cutoffs,
                 "p" + std::to_string(province));
    }
  } else {
    long long province = 0;
    ParseInt(scope, &province);
    GEOASR_CHECK(names.count(static_cast<int>(province)) != 0)
        << "province " << province << " has no corpus lines";
    train_pair({static_cast<int>(province)}, config.geo_cutoffs,
               "p" + std::to_string(province));
  }
  RefreshStoreManifest(config);
  return 0;
}

// ---------------------------------------------------------------------------
// build-graph

int CmdBuildGraph(const PipelineConfig &config) {
  graph::Lexicon lexicon = LoadLexicon(config);
  ngram::NGramModel baseline =
      ngram::ReadArpaFile(config.Path("lms/baseline.word.arpa"));

  std::vector<std::vector<std::string>> vocabularies{
      baseline.Vocab().Symbols()};
  geo::GeoLmStore store = geo::GeoLmStore::FromManifestFile(
      config.Path("lms/store.tsv"), config.Path("lms"));
  for (int province : store.RegisteredProvinces()) {
    vocabularies.push_back(
        store.Select(province, geo::LmLevel::kWord)->Vocab().Symbols());
  }

  auto unit_syms = graph::BuildUnitSymbols(lexicon);
  auto word_syms = graph::BuildWordSymbols(lexicon, vocabularies);
  wfst::Fst lexicon_fst = BuildLexiconFst(lexicon, unit_syms, word_syms);
  ngram::NGramModel bigram = ngram::MakeBigramSubset(baseline);
  wfst::Fst gbi_fst = graph::NgramToFst(bigram, word_syms);

  fs::create_directories(config.Path("graphs"));
  wfst::WriteFstFile(lexicon_fst, config.Path("graphs/L.fst"));
  wfst::WriteFstFile(gbi_fst, config.Path("graphs/Gbi.fst"));
  wfst::WriteSymbolTableFile(*unit_syms, config.Path("graphs/units.syms"));
  wfst::WriteSymbolTableFile(*word_syms, config.Path("graphs/words.syms"));
  std::cout << "build-graph: L " << lexicon_fst.NumStates() << " states / "
            << lexicon_fst.NumArcs() << " arcs, Gbi " << gbi_fst.NumStates()
            << " states / " << gbi_fst.NumArcs() << " arcs\n";
  return 0;
}

// ---------------------------------------------------------------------------
// decode

int CmdDecode(const PipelineConfig &config, const std::string &manifest_path,
              const std::string &out_path) {
  geo::ProvinceTable table = geo::ProvinceTable::FromFile(config.region_file);
  auto utterances = amsim::ManifestFromText(ReadFile(manifest_path));
  auto word_syms = wfst::ReadSymbolTableFile(config.Path("graphs/words.syms"));
  auto unit_syms = wfst::ReadSymbolTableFile(config.Path("graphs/units.syms"));
  wfst::Fst lexicon_fst = wfst::ReadFstFile(config.Path("graphs/L.fst"));
  lexicon_fst.SetInputSymbols(unit_syms);
  lexicon_fst.SetOutputSymbols(word_syms);
  wfst::Fst gbi_fst = wfst::ReadFstFile(config.Path("graphs/Gbi.fst"));
  gbi_fst.SetInputSymbols(word_syms);
  gbi_fst.SetOutputSymbols(word_syms);
  ngram::NGramModel baseline =
      ngram::ReadArpaFile(config.Path("lms/baseline.word.arpa"));
  geo::GeoLmStore store = geo::GeoLmStore::FromManifestFile(
      config.Path("lms/store.tsv"), config.Path("lms"));

  // Resolve provinces, load emissions, pin geo models.
  std::vector<decoder::EmissionSequence> emissions;
  std::vector<int> resolved;
  std::vector<std::shared_ptr<const ngram::NGramModel>> geo_models;
  for (const auto &utt : utterances) {
    auto res = table.Resolve(utt.lat, utt.lon);
    resolved.push_back(res.province_id);
    emissions.push_back(decoder::ReadEmissionFile(
        config.Path("emissions/" + utt.id + ".emis"), unit_syms));
    // Lambda 1 decodes with the baseline only; no geo model is selected.
    if (config.lambda < 1.0 && store.Registered(res.province_id)) {
      geo_models.push_back(store.Select(res.province_id, geo::LmLevel::kWord));
    } else {
      geo_models.push_back(nullptr);
    }
  }

  // Shared per-province scorer precomputation.
  std::map<int, std::shared_ptr<const graph::InterpolationTables>> tables;
  for (size_t i = 0; i < utterances.size(); ++i) {
    int p = geo_models[i] ? resolved[i] : 0;
    if (tables.count(p) == 0) {
      const ngram::NGramModel *geo =
          geo_models[i] ? geo_models[i].get() : &baseline;
      tables.emplace(
          p, graph::BuildInterpolationTables(baseline, *geo, *word_syms));
    }
  }
  std::vector<batch::DecodeJob> jobs;
  for (size_t i = 0; i < utterances.size(); ++i) {
    batch::DecodeJob job;
    job.lexicon_fst = &lexicon_fst;
    job.gbi_fst = &gbi_fst;
    job.base = &baseline;
    job.geo = geo_models[i] ? geo_models[i].get() : &baseline;
    job.tables = tables.at(geo_models[i] ? resolved[i] : 0);
    job.lambda = geo_models[i] ? config.lambda : 1.0;
    job.word_syms = word_syms;
    job.emissions = &emissions[i];
    job.options = {.beam = config.beam,
                   .nbest = config.nbest,
                   .lm_scale = config.lm_scale};
    job.retry_beam = 4 * config.beam;
    job.utt_id = utterances[i].id;
    job.province_id = resolved[i];
    jobs.push_back(std::move(job));
  }
  auto outcomes = batch::DecodeBatchParallel(jobs, config.threads);

  std::string out_text;
  int failures = 0;
  for (const auto &outcome : outcomes) {
    if (!outcome.ok()) {
      ++failures;
      std::cerr << "decode failed for " << outcome.nbest.utt_id << ": "
                << outcome.error << "\n";
      continue;
    }
    out_text += decoder::NBestToText(outcome.nbest, *word_syms);
  }
  WriteFile(out_path, out_text);
  std::cout << "decode: " << outcomes.size() - failures << "/"
            << outcomes.size() << " utterances to " << out_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// rescore

int CmdRescore(const PipelineConfig &config, const std::string &nbest_path,
               const std::string &out_path, bool use_char_geo) {
  graph::Lexicon lexicon = LoadLexicon(config);
  ngram::NGramModel word_base =
      ngram::ReadArpaFile(config.Path("lms/baseline.word.arpa"));
  ngram::NGramModel char_base =
      ngram::ReadArpaFile(config.Path("lms/baseline.char.arpa"));
  auto rescorer_model = std::make_shared<ngram::NGramModel>(
      ngram::ReadArpaFile(config.Path("lms/rescorer.char.arpa")));
  rescore::NgramRescorer rescorer(rescorer_model);
  geo::GeoLmStore store = geo::GeoLmStore::FromManifestFile(
      config.Path("lms/store.tsv"), config.Path("lms"));

  auto hyps = decoder::NBestFromText(ReadFile(nbest_path));
  // Group by utterance, preserving file order.
  std::vector<std::string> order;
  std::map<std::string, std::vector<decoder::TextHypothesis>> by_utt;
  for (auto &h : hyps) {
    if (by_utt.count(h.utt_id) == 0) order.push_back(h.utt_id);
    by_utt[h.utt_id].push_back(std::move(h));
  }

  rescore::InterpolationConfig ic{config.lambda, config.alpha, config.beta,
                                  config.gamma};
  if (!use_char_geo) {
    // Without a geo share, renormalize alpha/beta to keep their ratio.
    double total = config.alpha + config.beta;
    GEOASR_CHECK(total > 0) << "alpha + beta must be positive without geo";
    ic.alpha = config.alpha / total;
    ic.beta = config.beta / total;
  }
  ic.Validate();

  std::string out_text;
  for (const auto &utt_id : order) {
    const auto &utt_hyps = by_utt[utt_id];
    int province = utt_hyps.front().province_id;
    std::shared_ptr<const ngram::NGramModel> word_geo, char_geo;
    if (store.Registered(province)) {
      word_geo = store.Select(province, geo::LmLevel::kWord);
      char_geo = store.Select(province, geo::LmLevel::kCharacter);
    }
    rescore::RescoreModels models;
    models.word_base = &word_base;
    models.word_geo = word_geo ? word_geo.get() : &word_base;
    models.char_base = &char_base;
    models.char_geo =
        (use_char_geo && char_geo) ? char_geo.get() : &char_base;
    models.rescorer = &rescorer;
    models.lexicon = &lexicon;
    auto rescored =
        rescore::RescoreNBest(utt_hyps, models, ic, config.lm_scale);
    out_text += rescore::RescoredToText(rescored);
  }
  WriteFile(out_path, out_text);
  std::cout << "rescore: " << order.size() << " utterances to " << out_path
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// eval

int CmdEval(const PipelineConfig &config, const std::string &refs_path,
            const std::string &hyps_path, const std::string &group_by,
            const std::string &baseline_hyps_path,
            const std::string &out_path) {
  geo::ProvinceTable table = geo::ProvinceTable::FromFile(config.region_file);
  graph::Lexicon lexicon = LoadLexicon(config);
  auto refs = amsim::ManifestFromText(ReadFile(refs_path));

  // Rank-1 hypothesis words per utterance from either file format.
  auto load_top = [&](const std::string &path) {
    std::map<std::string, std::vector<std::string>> top;
    std::string text = ReadFile(path);
    bool rescored = !text.empty() && SplitTabs(SplitFields(text, "\n")[0]).size() == 9;
    if (rescored) {
      for (const auto &r : rescore::RescoredFromText(text)) {
        if (top.count(r.hyp.utt_id) == 0) top[r.hyp.utt_id] = r.hyp.words;
      }
    } else {
      for (const auto &h : decoder::NBestFromText(text)) {
        if (top.count(h.utt_id) == 0) top[h.utt_id] = h.words;
      }
    }
    return top;
  };
  auto hyp_top = load_top(hyps_path);

  auto group_of = [&](const amsim::Utterance &utt) -> std::string {
    if (group_by == "province") {
      return table.Get(utt.province).name;
    }
    if (group_by == "region") {
      return "region" + std::to_string(table.Get(utt.province).region);
    }
    if (group_by == "accent") {
      return config.accent;
    }
    GEOASR_ERROR() << "unknown group-by: " << group_by;
  };

  auto build_report = [&](const std::map<std::string,
                                         std::vector<std::string>> &top) {
    eval::CerReport report;
    std::vector<std::string> missing;
    for (const auto &utt : refs) {
      auto it = top.find(utt.id);
      if (it == top.end()) {
        missing.push_back(utt.id);
        continue;
      }
      auto ref_units = WordsToUnits(lexicon, utt.words);
      auto hyp_units = WordsToUnits(lexicon, it->second);
      report.Add(group_of(utt), ref_units, hyp_units);
    }
    GEOASR_CHECK(missing.empty())
        << "utterance ids missing from hypotheses: "
        << JoinFields(missing, " ");
    return report;
  };

  eval::CerReport report = build_report(hyp_top);
  std::string tsv;
  if (!baseline_hyps_path.empty()) {
    eval::CerReport baseline = build_report(load_top(baseline_hyps_path));
    tsv = report.ToTsv(&baseline);
    std::cout << report.ToText(&baseline);
  } else {
    tsv = report.ToTsv();
    std::cout << report.ToText();
  }
  if (!out_path.empty()) WriteFile(out_path, tsv);
  return 0;
}

}  // namespace
}  // namespace geoasr

int main(int argc, char **argv) {
  using geoasr::PipelineConfig;
  CLI::App app{"geography-aware POI speech decoding pipeline"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "pipeline configuration (JSON)");

  std::string scope = "all", manifest, nbest_in, out, refs, hyps, group_by =
      "province", baseline_hyps;
  bool no_char_geo = false;
  double lambda_override = -1, alpha_override = -1, beta_override = -1,
         gamma_override = -1, beam_override = -1;
  int nbest_override = -1, threads_override = -1;
  uint64_t seed_override = 0;
  std::string accent_override;

  CLI::App *gen = app.add_subcommand("gen-corpus",
                                     "generate synthetic corpora/emissions");
  gen->add_option("--seed", seed_override, "override the config seed");
  gen->add_option("--accent", accent_override,
                  "accent level: none|slight|medium|serious");

  CLI::App *train = app.add_subcommand("train-lm", "train Kneser-Ney models");
  train->add_option("--scope", scope,
                    "`baseline`, `all` or a province id");

  CLI::App *build = app.add_subcommand("build-graph",
                                       "build lexicon/grammar transducers");

  CLI::App *decode = app.add_subcommand("decode", "first-pass decoding");
  decode->add_option("--manifest", manifest, "utterance manifest");
  decode->add_option("--out", out, "n-best output file");
  decode->add_option("--lambda", lambda_override, "first-pass mix weight");
  decode->add_option("--beam", beam_override, "beam width");
  decode->add_option("--nbest", nbest_override, "n-best depth");
  decode->add_option("--threads", threads_override, "worker threads");

  CLI::App *rescore_cmd = app.add_subcommand("rescore",
                                             "second-pass rescoring");
  rescore_cmd->add_option("--nbest-in", nbest_in, "first-pass n-best file");
  rescore_cmd->add_option("--out", out, "rescored output file");
  rescore_cmd->add_option("--alpha", alpha_override, "pass-2 baseline share");
  rescore_cmd->add_option("--beta", beta_override, "pass-2 rescorer share");
  rescore_cmd->add_option("--gamma", gamma_override, "pass-1 share");
  rescore_cmd->add_flag("--no-char-geo", no_char_geo,
                        "rescore without the character geo models");

  CLI::App *eval_cmd = app.add_subcommand("eval", "CER evaluation");
  eval_cmd->add_option("--refs", refs, "reference manifest");
  eval_cmd->add_option("--hyps", hyps, "n-best or rescored hypotheses");
  eval_cmd->add_option("--group-by", group_by, "province|region|accent");
  eval_cmd->add_option("--baseline-hyps", baseline_hyps,
                       "hypotheses of a baseline system for CERR");
  eval_cmd->add_option("--out", out, "report TSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    PipelineConfig config = geoasr::LoadConfig(config_path);
    if (seed_override != 0) config.seed = seed_override;
    if (!accent_override.empty()) config.accent = accent_override;
    if (lambda_override >= 0) config.lambda = lambda_override;
    if (alpha_override >= 0) config.alpha = alpha_override;
    if (beta_override >= 0) config.beta = beta_override;
    if (gamma_override >= 0) config.gamma = gamma_override;
    if (beam_override > 0) config.beam = beam_override;
    if (nbest_override > 0) config.nbest = nbest_override;
    if (threads_override >= 0) config.threads = threads_override;
    config.Validate();

    if (gen->parsed()) return geoasr::CmdGenCorpus(config);
    if (train->parsed()) return geoasr::CmdTrainLm(config, scope);
    if (build->parsed()) return geoasr::CmdBuildGraph(config);
    if (decode->parsed()) {
      if (manifest.empty()) manifest = config.Path("test.tsv");
      if (out.empty()) out = config.Path("nbest.tsv");
      return geoasr::CmdDecode(config, manifest, out);
    }
    if (rescore_cmd->parsed()) {
      if (nbest_in.empty()) nbest_in = config.Path("nbest.tsv");
      if (out.empty()) out = config.Path("rescored.tsv");
      return geoasr::CmdRescore(config, nbest_in, out, !no_char_geo);
    }
    if (eval_cmd->parsed()) {
      if (refs.empty()) refs = config.Path("test.tsv");
      if (hyps.empty()) hyps = config.Path("nbest.tsv");
      return geoasr::CmdEval(config, refs, hyps, group_by, baseline_hyps,
                             out);
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
