// decoder/emission.cc
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

#include "decoder/emission.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "base/error.h"
#include "base/fileio.h"
#include "base/stringutil.h"

namespace geoasr {
namespace decoder {

void EmissionSequence::Validate() const {
  GEOASR_CHECK(unit_syms != nullptr) << "emission lacks a unit symbol table";
  for (size_t t = 0; t < frames.size(); ++t) {
    GEOASR_CHECK(frames[t].size() == unit_syms->Size())
        << "frame " << t << " has " << frames[t].size()
        << " slots, expected " << unit_syms->Size();
    double mass = 0.0;
    for (size_t u = 1; u < frames[t].size(); ++u) {
      mass += std::exp(frames[t][u]);
    }
    GEOASR_CHECK(std::abs(mass - 1.0) <= 1e-6)
        << "frame " << t << " posteriors sum to " << mass;
  }
}

std::string EmissionToText(const EmissionSequence &emissions) {
  std::ostringstream out;
  size_t units = emissions.NumUnits();
  out << "frames\t" << emissions.NumFrames() << "\tunits\t" << units << "\n";
  char buf[64];
  for (const auto &frame : emissions.frames) {
    for (size_t u = 1; u <= units; ++u) {
      std::snprintf(buf, sizeof(buf), "%.17g", frame[u]);
      out << (u > 1 ? "\t" : "") << buf;
    }
    out << "\n";
  }
  return out.str();
}

EmissionSequence EmissionFromText(const std::string &text,
                                  wfst::SymbolTablePtr unit_syms) {
  EmissionSequence emissions;
  emissions.unit_syms = std::move(unit_syms);
  std::istringstream in(text);
  std::string line;
  GEOASR_CHECK(static_cast<bool>(std::getline(in, line)))
      << "empty emission text";
  auto header = SplitTabs(StripLineEnding(line));
  long long num_frames = 0, num_units = 0;
  GEOASR_CHECK(header.size() == 4 && header[0] == "frames" &&
               header[2] == "units" && ParseInt(header[1], &num_frames) &&
               ParseInt(header[3], &num_units))
      << "bad emission header: " << line;
  GEOASR_CHECK(num_units + 1 ==
               static_cast<long long>(emissions.unit_syms->Size()))
      << "emission unit count " << num_units
      << " does not match the symbol table";
  for (long long t = 0; t < num_frames; ++t) {
    GEOASR_CHECK(static_cast<bool>(std::getline(in, line)))
        << "emission text truncated at frame " << t;
    auto fields = SplitTabs(StripLineEnding(line));
    GEOASR_CHECK(static_cast<long long>(fields.size()) == num_units)
        << "frame " << t << " has " << fields.size() << " fields";
    std::vector<double> frame(num_units + 1, -wfst::kInfiniteCost);
    frame[0] = -wfst::kInfiniteCost;
    for (long long u = 0; u < num_units; ++u) {
      GEOASR_CHECK(ParseDouble(fields[u], &frame[u + 1]))
          << "bad log-posterior at frame " << t << " unit " << u + 1;
    }
    emissions.frames.push_back(std::move(frame));
  }
  return emissions;
}

void WriteEmissionFile(const EmissionSequence &emissions,
                       const std::string &path) {
  WriteFile(path, EmissionToText(emissions));
}

EmissionSequence ReadEmissionFile(const std::string &path,
                                  wfst::SymbolTablePtr unit_syms) {
  return EmissionFromText(ReadFile(path), std::move(unit_syms));
}

}  // namespace decoder
}  // namespace geoasr
