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

#include <cstdint>
#include <utility>
#include <vector>

#include "gqca/cell.hpp"
#include "gqca/rng.hpp"
#include "gqca/rule.hpp"
#include "gqca/state.hpp"

namespace gqca {

/// Applies one globally-broadcast rule: every cell of the rule's type whose
/// field equals the rule's field receives the gate. The per-cell controlled
/// factors commute (controls live on cells of the other type), so the result
/// is order independent. Norm is preserved to 1e-12 per pulse.
void apply_rule(QuantumState &state, const UpdateRule &rule);

/// Left fold of apply_rule; errors rethrown with the rule index attached.
void apply_sequence(QuantumState &state, const PulseSequence &seq);

/// Classical fast path for rules whose gate maps basis states to basis
/// states up to phase. O(n_cells); equals apply_rule on the corresponding
/// basis state, ignoring global phase. Throws NonClassicalGate otherwise.
CellConfig classical_apply(const CellConfig &config, const UpdateRule &rule,
                           Mode mode = Mode::TwoLevel);

CellConfig classical_apply_sequence(const CellConfig &config, const PulseSequence &seq,
                                    Mode mode = Mode::TwoLevel);

/// Classical path that also carries the accumulated phase of the basis term,
/// exact for permutation-up-to-phase gates (diagonal gates included). Used by
/// the logical-action extractor to avoid dense simulation of permutation
/// sequences.
struct PhasedConfig {
    CellConfig config;
    cdouble phase{1.0, 0.0};
};
PhasedConfig classical_apply_phased(const PhasedConfig &in, const UpdateRule &rule,
                                    Mode mode = Mode::TwoLevel);
PhasedConfig classical_apply_sequence_phased(const PhasedConfig &in, const PulseSequence &seq,
                                             Mode mode = Mode::TwoLevel);

/// True if every rule of `seq` qualifies for the classical phased path.
bool sequence_is_classical(const PulseSequence &seq);

/// Dense matrix of the rule's global operator, the product of per-cell
/// controlled factors; test oracle, capped at 12 cells. Row-major dim x dim.
std::vector<cdouble> build_global_operator(const UpdateRule &rule, size_t n_cells,
                                           Mode mode = Mode::TwoLevel);

/// Dense factor of a single target cell (controlled gate on `cell`); exposed
/// for the order-independence oracle.
std::vector<cdouble> build_cell_factor(const UpdateRule &rule, size_t n_cells, size_t cell,
                                       Mode mode = Mode::TwoLevel);

/// Indices of cells a rule targets (type match only; the field condition is
/// per basis state).
std::vector<size_t> rule_target_cells(const UpdateRule &rule, size_t n_cells);

/// Measures the {Fluor vs not-Fluor} projector on every B cell in ascending
/// order, mapping Fluor to Down on a click and counting one emission per
/// click. One uniform variate is consumed per B cell regardless of outcome.
/// 3-level mode only.
size_t decay_channel(QuantumState &state, Rng &rng);
inline std::pair<QuantumState, size_t> decay_channel(QuantumState state, uint64_t seed) {
    Rng rng(seed);
    size_t emissions = decay_channel(state, rng);
    return {std::move(state), emissions};
}

}  // namespace gqca
