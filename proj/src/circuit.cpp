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

#include "gqca/circuit.hpp"

#include <algorithm>

#include "gqca/errors.hpp"

namespace gqca {

void apply_circuit(std::vector<int> &bits, const BitCircuit &circuit) {
    for (const BitGate &g : circuit) {
        bool fire = true;
        switch (g.op) {
            case BitGate::Op::X:
                break;
            case BitGate::Op::Cnot:
                fire = bits.at(g.c1) == (g.s1 ? 1 : 0);
                break;
            case BitGate::Op::Toffoli:
                fire = bits.at(g.c1) == (g.s1 ? 1 : 0) && bits.at(g.c2) == (g.s2 ? 1 : 0);
                break;
        }
        if (fire) {
            bits.at(g.target) ^= 1;
        }
    }
}

BitCircuit reversed_circuit(const BitCircuit &circuit) {
    BitCircuit out(circuit.rbegin(), circuit.rend());
    return out;
}

}  // namespace gqca
