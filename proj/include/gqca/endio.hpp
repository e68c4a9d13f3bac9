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

#include "gqca/layout.hpp"
#include "gqca/rule.hpp"

namespace gqca {

/// Builds the word onto an all-Down array using only end-cell rules (fields
/// +-1) and transport pulses: Up pairs are pumped in at the array ends and
/// ride the global alternation to their slots. Qubit pairs enter at the left
/// end, CU pairs at the right end; every block arrives on the final pulse.
///
/// Requires an even cell count, two spare cells past the leftmost Up pair,
/// and two past the rightmost; throws Error("array too short...") otherwise.
PulseSequence load_bits(const Layout &layout, const LogicalWord &word);

/// Classical readout of the designated measurement end (the left end):
/// 1 iff cell 0 is Up.
int read_end(const CellConfig &config);

}  // namespace gqca
