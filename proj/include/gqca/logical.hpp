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

#include "gqca/engine.hpp"
#include "gqca/layout.hpp"
#include "gqca/rule.hpp"

namespace gqca {

/// A logical gate over the coded qubits.
struct GateSpec {
    enum class Kind { OneQubit, ControlledU, CCU };

    Kind kind = Kind::OneQubit;
    Gate1 u = gates::pauli_x();
    std::string u_label = "X";
    size_t target = 0;
    size_t control1 = 0;         // ControlledU, CCU
    size_t control2 = 0;         // CCU
    bool control1_on_one = true;  // false: fires where the control reads 0
    bool control2_on_one = true;

    /// "X@0", "C-X@1,0" (control, target), "C0-X@1,0" fire-on-zero,
    /// "CC-X@2,1,0", and mixed-sense CCU variants "CC10-X@2,1,0" (first
    /// control fires on 1, second on 0), "CC01-...", "CC00-...".
    std::string literal() const;
    static GateSpec from_literal(const std::string &literal);

    /// Control-sense signature: "" (OneQubit), "1"/"0", "11"/"10"/"01"/"00".
    std::string sense_signature() const;

    /// Distinct qubit indices, controls before target.
    std::vector<size_t> operands() const;

    /// True if the gate acts on logical word `index` (controls satisfied).
    bool enabled_on(size_t index, size_t n_qubits) const;
};

/// Dense matrix of the spec over the 2^n_qubits logical space, row-major,
/// qubit 0 the most significant bit.
std::vector<cdouble> logical_matrix(const GateSpec &spec, size_t n_qubits);

/// The unitary a pulse sequence induces on the coded subspace, together with
/// the norm that escaped it and the frame displacement the sequence caused.
struct LogicalAction {
    size_t n_qubits = 0;
    std::vector<cdouble> matrix;  // row-major, 2^n x 2^n
    double leakage = 0.0;         // max over inputs of norm lost outside the code
    long displacement = 0;        // qubit shift; the CU frame shifts by -displacement

    cdouble at(size_t out, size_t in) const { return matrix[out * (size_t{1} << n_qubits) + in]; }
    double max_deviation(const std::vector<cdouble> &target) const;
    double unitarity_defect() const;
};

/// Simulates `seq` on every encoded basis word of `layout`, projects the
/// results onto the coded subspace over candidate frame displacements, and
/// reports the action at the displacement that captures the most norm (ties:
/// smaller magnitude, then negative). Falls back to the exact phase-tracked
/// classical path when every pulse is a permutation.
LogicalAction extract_logical_action(const PulseSequence &seq, const Layout &layout,
                                     Mode mode = Mode::TwoLevel);

}  // namespace gqca
