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

#include <string>
#include <vector>

#include "gqca/cell.hpp"
#include "gqca/gate.hpp"

namespace gqca {

/// One globally-broadcast pulse: apply `gate` to every cell of type `kind`
/// whose field equals `field`.
///
/// `label` keeps the textual gate name for round-trip formatting. The label
/// "U" marks the substitution slot of a stored library sequence; such a rule
/// must have a concrete gate substituted before application.
struct UpdateRule {
    CellType kind = CellType::A;
    int field = 0;
    Gate1 gate = gates::inversion();
    std::string label = "INV";

    UpdateRule() = default;
    UpdateRule(CellType k, int f) : kind(k), field(f) {}
    UpdateRule(CellType k, int f, Gate1 g, std::string lbl)
        : kind(k), field(f), gate(std::move(g)), label(std::move(lbl)) {}

    bool is_slot() const { return label == "U"; }

    /// Same rule carrying the adjoint gate.
    UpdateRule inverted() const;

    /// Throws unless field is in {-2..2} and the gate is unitary with a
    /// dimension legal for `mode` (3x3 only on B-cell rules in 3-level mode).
    void validate(Mode mode) const;
};

using PulseSequence = std::vector<UpdateRule>;

/// Reversed order, each gate conjugate-transposed; exact inverse under
/// apply_sequence.
PulseSequence inverse_sequence(const PulseSequence &seq);

/// Swaps A and B in every rule. Translating the array by one cell exchanges
/// the cell types, so a sequence valid at one block parity acts identically,
/// parity-swapped, at the other.
PulseSequence parity_swapped(const PulseSequence &seq);

/// Rule literals: `A0`, `B-2`, `A1:H`, `B0:INV`, `B2:U[matrix]`, `B2:U`.
/// The gate defaults to INV when omitted.
std::string format_rule(const UpdateRule &rule);
UpdateRule parse_rule(const std::string &literal);

/// Whitespace-separated rule literals; '#' starts a line comment.
std::string format_sequence(const PulseSequence &seq);
PulseSequence parse_sequence(const std::string &text);

PulseSequence load_pulse_file(const std::string &path);
void save_pulse_file(const std::string &path, const PulseSequence &seq);

std::string format_complex(cdouble z);
cdouble parse_complex(const std::string &text);

}  // namespace gqca
