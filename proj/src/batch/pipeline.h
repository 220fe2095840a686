// batch/pipeline.h
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
// Per-utterance batch kernels.  Each kernel has an OpenMP-parallel form and
// a serial reference form; utterances are independent, so the two produce
// bit-identical outputs in input order.

#ifndef GEOASR_BATCH_PIPELINE_H_
#define GEOASR_BATCH_PIPELINE_H_

#include <string>
#include <vector>

#include "amsim/confusion.h"
#include "amsim/emission_synth.h"
#include "decoder/beam_decoder.h"
#include "eval/cer.h"
#include "graph/first_pass.h"
#include "ngram/model.h"

namespace geoasr {
namespace batch {

// Threads actually used: requested, or the OpenMP default when <= 0 (1
// without OpenMP).
int EffectiveThreads(int requested);

struct DecodeJob {
  const wfst::Fst *lexicon_fst = nullptr;
  const wfst::Fst *gbi_fst = nullptr;
  const ngram::NGramModel *base = nullptr;
  const ngram::NGramModel *geo = nullptr;  // may equal base
  // Optional shared precomputation for (base, geo); built per job if null.
  std::shared_ptr<const graph::InterpolationTables> tables;
  double lambda = 1.0;
  wfst::SymbolTablePtr word_syms;
  const decoder::EmissionSequence *emissions = nullptr;
  decoder::DecoderOptions options;
  // When positive, a decode that dies in the beam is retried once at this
  // wider beam before the failure is recorded.
  double retry_beam = 0.0;
  std::string utt_id;
  int province_id = -1;
};

struct DecodeOutcome {
  decoder::NBestList nbest;
  std::string error;  // nonempty when the decode failed

  bool ok() const { return error.empty(); }
};

std::vector<DecodeOutcome> DecodeBatchSerial(
    const std::vector<DecodeJob> &jobs);
std::vector<DecodeOutcome> DecodeBatchParallel(
    const std::vector<DecodeJob> &jobs, int threads);

struct SynthesisJob {
  std::vector<int> units;
  const amsim::ConfusionModel *confusion = nullptr;
  double temperature = 0.3;
  uint64_t seed = 1;
  uint64_t utterance_index = 0;
};

std::vector<decoder::EmissionSequence> SynthesizeBatchSerial(
    const std::vector<SynthesisJob> &jobs,
    const wfst::SymbolTablePtr &unit_syms);
std::vector<decoder::EmissionSequence> SynthesizeBatchParallel(
    const std::vector<SynthesisJob> &jobs,
    const wfst::SymbolTablePtr &unit_syms, int threads);

std::vector<eval::EditCounts> CerBatchSerial(
    const std::vector<std::vector<std::string>> &references,
    const std::vector<std::vector<std::string>> &hypotheses);
std::vector<eval::EditCounts> CerBatchParallel(
    const std::vector<std::vector<std::string>> &references,
    const std::vector<std::vector<std::string>> &hypotheses, int threads);

}  // namespace batch
}  // namespace geoasr

#endif  // GEOASR_BATCH_PIPELINE_H_
