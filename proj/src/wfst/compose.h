// wfst/compose.h
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
// Static transducer composition.  Epsilon paths go through a two-state
// filter: once a right-side epsilon move is taken, left-side epsilon moves
// are blocked until the next matched label, so every compatible path pair
// maps to exactly one composed path.

#ifndef GEOASR_WFST_COMPOSE_H_
#define GEOASR_WFST_COMPOSE_H_

#include "wfst/fst.h"

namespace geoasr {
namespace wfst {

// Throws unless a's output symbol table and b's input symbol table agree
// (same object or same content).
void CheckComposable(const Fst &a, const Fst &b);

Fst ComposeStatic(const Fst &a, const Fst &b);

// Same topology and labels with every arc and final cost multiplied by -1.
// Throws if an arc carries an infinite cost.
Fst NegateWeights(const Fst &a);

}  // namespace wfst
}  // namespace geoasr

#endif  // GEOASR_WFST_COMPOSE_H_
