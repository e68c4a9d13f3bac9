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

#include <cstddef>
#include <vector>

namespace gqca {

/// One reversible gate over named bits. Controls carry a sense: the gate
/// fires when the control reads the sense value. Every gate is self-inverse.
struct BitGate {
    enum class Op { X, Cnot, Toffoli };
    Op op = Op::X;
    size_t target = 0;
    size_t c1 = 0;
    size_t c2 = 0;
    bool s1 = true;
    bool s2 = true;
};

using BitCircuit = std::vector<BitGate>;

/// Reference semantics for tests and the predicate builders.
void apply_circuit(std::vector<int> &bits, const BitCircuit &circuit);

/// Self-inverse gates reversed in place undo the circuit.
BitCircuit reversed_circuit(const BitCircuit &circuit);

}  // namespace gqca
