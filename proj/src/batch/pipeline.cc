// batch/pipeline.cc
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

#include "batch/pipeline.h"

#ifdef GEOASR_HAVE_OPENMP
#include <omp.h>
#endif

#include "base/error.h"

namespace geoasr {
namespace batch {

int EffectiveThreads(int requested) {
  if (requested > 0) return requested;
#ifdef GEOASR_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

DecodeOutcome RunDecodeJob(const DecodeJob &job) {
  DecodeOutcome outcome;
  outcome.nbest.utt_id = job.utt_id;
  outcome.nbest.province_id = job.province_id;
  try {
    GEOASR_CHECK(job.lexicon_fst && job.gbi_fst && job.base && job.emissions)
        << "incomplete decode job for " << job.utt_id;
    graph::DecodeGraph g = graph::AssembleFirstPass(
        *job.lexicon_fst, *job.gbi_fst, job.base,
        job.geo ? job.geo : job.base, job.lambda, job.word_syms, job.tables);
    decoder::NBestList nbest;
    try {
      nbest = decoder::Decode(g.graph.get(), *job.emissions, job.options);
    } catch (const std::exception &) {
      if (job.retry_beam <= job.options.beam) throw;
      decoder::DecoderOptions wide = job.options;
      wide.beam = job.retry_beam;
      nbest = decoder::Decode(g.graph.get(), *job.emissions, wide);
    }
    outcome.nbest.hyps = std::move(nbest.hyps);
  } catch (const std::exception &e) {
    outcome.error = e.what();
  }
  return outcome;
}

}  // namespace

std::vector<DecodeOutcome> DecodeBatchSerial(
    const std::vector<DecodeJob> &jobs) {
  std::vector<DecodeOutcome> out(jobs.size());
  for (size_t i = 0; i < jobs.size(); ++i) {
    out[i] = RunDecodeJob(jobs[i]);
  }
  return out;
}

std::vector<DecodeOutcome> DecodeBatchParallel(
    const std::vector<DecodeJob> &jobs, int threads) {
  std::vector<DecodeOutcome> out(jobs.size());
  int n = EffectiveThreads(threads);
#ifdef GEOASR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(n)
#endif
  for (long i = 0; i < static_cast<long>(jobs.size()); ++i) {
    out[i] = RunDecodeJob(jobs[i]);
  }
  (void)n;
  return out;
}

std::vector<decoder::EmissionSequence> SynthesizeBatchSerial(
    const std::vector<SynthesisJob> &jobs,
    const wfst::SymbolTablePtr &unit_syms) {
  std::vector<decoder::EmissionSequence> out(jobs.size());
  for (size_t i = 0; i < jobs.size(); ++i) {
    out[i] = amsim::SynthesizeEmissions(jobs[i].units, *jobs[i].confusion,
                                        unit_syms, jobs[i].temperature,
                                        jobs[i].seed, jobs[i].utterance_index);
  }
  return out;
}

std::vector<decoder::EmissionSequence> SynthesizeBatchParallel(
    const std::vector<SynthesisJob> &jobs,
    const wfst::SymbolTablePtr &unit_syms, int threads) {
  std::vector<decoder::EmissionSequence> out(jobs.size());
  int n = EffectiveThreads(threads);
#ifdef GEOASR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(n)
#endif
  for (long i = 0; i < static_cast<long>(jobs.size()); ++i) {
    out[i] = amsim::SynthesizeEmissions(jobs[i].units, *jobs[i].confusion,
                                        unit_syms, jobs[i].temperature,
                                        jobs[i].seed, jobs[i].utterance_index);
  }
  (void)n;
  return out;
}

std::vector<eval::EditCounts> CerBatchSerial(
    const std::vector<std::vector<std::string>> &references,
    const std::vector<std::vector<std::string>> &hypotheses) {
  GEOASR_CHECK(references.size() == hypotheses.size())
      << "reference/hypothesis count mismatch";
  std::vector<eval::EditCounts> out(references.size());
  for (size_t i = 0; i < references.size(); ++i) {
    out[i] = eval::Cer(references[i], hypotheses[i]);
  }
  return out;
}

std::vector<eval::EditCounts> CerBatchParallel(
    const std::vector<std::vector<std::string>> &references,
    const std::vector<std::vector<std::string>> &hypotheses, int threads) {
  GEOASR_CHECK(references.size() == hypotheses.size())
      << "reference/hypothesis count mismatch";
  std::vector<eval::EditCounts> out(references.size());
  int n = EffectiveThreads(threads);
#ifdef GEOASR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(n)
#endif
  for (long i = 0; i < static_cast<long>(references.size()); ++i) {
    out[i] = eval::Cer(references[i], hypotheses[i]);
  }
  (void)n;
  return out;
}

}  // namespace batch
}  // namespace geoasr
