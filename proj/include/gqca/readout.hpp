// Copyright 2026 The gqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "gqca/library.hpp"
#include "gqca/rng.hpp"

namespace gqca {

struct ReadoutResult {
    int bit = 0;            // emissions observed at any cycle
    size_t emissions = 0;
};

/// Fluorescence readout of one coded qubit: per cycle the library's
/// one-qubit sequence compresses the qubit onto its trigger cell, the gate
/// pulse swaps the logical-one level with the fast-decaying third level, the
/// decay channel fires (and is measured) while the qubit is still
/// compressed, and the sequence tail restores the code. A coded basis word
/// emits on every cycle when the qubit reads 1 and never when it reads 0;
/// a superposed qubit collapses on the first cycle with the Born weight.
///
/// On 3-level states the third level is simulated explicitly. On 2-level
/// states the swap-then-decay pair reduces exactly to a projective
/// measurement of the trigger cell, which keeps large arrays affordable;
/// the random-variate stream matches the 3-level path draw for draw.
ReadoutResult fluorescence_readout(QuantumState &state, const Layout &layout, size_t qubit,
                                   size_t cycles, uint64_t seed, const GateLibrary &lib);

ReadoutResult fluorescence_readout(QuantumState &state, const Layout &layout, size_t qubit,
                                   size_t cycles, Rng &rng, const GateLibrary &lib);

}  // namespace gqca
