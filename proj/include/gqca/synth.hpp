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

#include <optional>
#include <string>
#include <vector>

#include "gqca/logical.hpp"

namespace gqca {

/// Bounded search for a pulse sequence realizing a logical gate.
///
/// The search runs over classical (inversion) pulses and looks for a prefix
/// after which one cell carries the target qubit: the images of words that
/// differ only in the target bit differ in exactly that cell, the cell's
/// field is the same in both and is matched by no other cell of its type in
/// any image (so a field-conditioned pulse there touches nothing else).
/// Words the gate must not act on must expose no matching cell at all. The
/// gate pulse carrying U is inserted at that point and the prefix is
/// re-applied in reverse order.
struct SynthesisProblem {
    Layout layout;
    GateSpec target;
    /// Classical pulse alphabet searched by BFS; defaulted when empty.
    PulseSequence alphabet;
    size_t max_len = 14;
    double tolerance = 1e-8;
    /// Include the end-cell rules (field +-1) in the default alphabet.
    bool allow_end_rules = false;
    /// Skip the quantum verification pass (classical truth-table check only).
    bool classical_only = false;
    /// Field values the gate pulse may condition on. Coded environments show
    /// no +2 cells anywhere, so +2 triggers are safe next to unrelated
    /// blocks; end-cell entries use {+1,-1} instead.
    std::vector<int> trigger_fields = {2};
    /// Require the trigger to survive translating every block by +2 cells
    /// (rejects selectivity borrowed from the array ends). Needs 2 cells of
    /// slack beyond the last block.
    bool translation_check = true;
    /// Layout used for verification when it differs from the search layout
    /// (search layouts carry wide margins; verification wants the smallest
    /// array the sequence fits).
    std::optional<Layout> verify_layout;
    /// Reject triggers whose cell reads Up for logical one; the decay lands
    /// on Down, so fluorescence entries need the Down representation.
    bool require_one_reads_down = false;
    /// Exhaustive breadth-first depth; prefixes past it are searched as
    /// [transport run][free burst] with the burst capped at
    /// seeded_free_depth. Node counts triple per level, which pins the
    /// practical exhaustive bound.
    size_t exhaustive_depth = 12;
    size_t seeded_free_depth = 12;
};

struct TriggerInfo {
    CellType kind = CellType::B;
    int field = 2;
    size_t cell = 0;
    /// True when the trigger cell reads Down for target bit 1 (the canonical
    /// orientation the readout transform expects).
    bool one_reads_down = true;
};

struct SynthesisResult {
    PulseSequence sequence;   // slot rule carries label "U"
    size_t slot_index = 0;    // position of the U slot within sequence
    TriggerInfo trigger;
    double action_error = 0.0;     // max deviation from the target matrix
    double leakage = 0.0;
    long displacement = 0;
    size_t nodes_expanded = 0;
    bool quantum_verified = false;
    /// Whether a disabled-word image ever shows the CU pattern rewritten as
    /// six consecutive Up cells (the solid-form intermediate).
    bool solid_cu_intermediate = false;
};

/// Default alphabet: inversion rules over kind {A,B} x field {0, 2, -2},
/// optionally the end-cell rules (field +-1).
PulseSequence default_alphabet(bool allow_end_rules);

/// Breadth-first synthesis with deterministic lexicographic tie-breaking.
/// Returns nullopt when no sequence within max_len satisfies the problem;
/// that outcome is definitive for the given alphabet and length bound.
std::optional<SynthesisResult> synthesize(const SynthesisProblem &problem);

/// Substitutes `u` into the slot rule of `seq` (label "U"), promoting the
/// slot to the concrete gate. Throws if the sequence has no slot.
PulseSequence substitute_slot(const PulseSequence &seq, size_t slot_index, const Gate1 &u,
                              const std::string &label);

/// A conditional control-unit stamp: a classical pulse run after which the
/// CU sits at a displaced slot in canonical form when the adjacent bit reads
/// `keep_on`, and in a distinct six-cell form otherwise. The altered form is
/// absorbing (an already-altered CU stays altered for either bit value) and
/// rides transport pulses rigidly, so a sweep over several bits accumulates
/// a running AND on the CU itself.
struct StampProblem {
    Layout layout;    // one qubit slot (the bit) plus the CU slot
    int keep_on = 1;  // bit value that leaves the CU canonical
    PulseSequence alphabet;
    size_t max_len = 26;
    size_t exhaustive_depth = 12;
    size_t seeded_free_depth = 12;
};

struct StampResult {
    PulseSequence pulses;            // forward half only; callers reverse it
    long displacement = 0;           // qubit-frame shift; the CU moves opposite
    std::vector<CellLevel> altered;  // the six-cell altered form
    size_t nodes_expanded = 0;
};

std::optional<StampResult> synthesize_stamp(const StampProblem &problem);

/// JSON verification report for a synthesis result.
std::string synthesis_report_json(const SynthesisProblem &problem, const SynthesisResult &result);

}  // namespace gqca
