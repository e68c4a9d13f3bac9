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

#include "gqca/readout.hpp"

#include <cmath>

namespace gqca {

namespace {

/// Locates the cell the gate pulse addresses by replaying the assembled
/// prefix classically on one coded word: the trigger condition guarantees a
/// unique matching cell across every image.
size_t trigger_cell_at_slot(const AssembledGate &gate, const Layout &layout) {
    LogicalWord word;
    word.bits.assign(layout.n_qubits(), 0);
    word.cu_present = layout.cu_slot.has_value();
    CellConfig probe = encode(layout, word);
    for (size_t i = 0; i < gate.slot_index; ++i) {
        probe = classical_apply(probe, gate.pulses[i]);
    }
    const UpdateRule &slot = gate.pulses[gate.slot_index];
    long cell = -1;
    for (size_t i = slot.kind == CellType::A ? 0 : 1; i < probe.n_cells(); i += 2) {
        if (field_of(probe, i) == slot.field) {
            if (cell >= 0) {
                throw Error("readout: gate pulse matches more than one cell");
            }
            cell = static_cast<long>(i);
        }
    }
    if (cell < 0) {
        throw Error("readout: gate pulse matches no cell");
    }
    return static_cast<size_t>(cell);
}

/// Projects the trigger cell of a 2-level state onto {Down = click, Up = no
/// click}: exactly the swap-to-Fluor followed by the decay measurement,
/// with the Fluor level eliminated. Consumes one variate per B cell so the
/// stream matches decay_channel.
size_t fused_decay(QuantumState &state, size_t trigger, Rng &rng) {
    const BasisIndexer &ix = state.indexer();
    auto &amps = state.amplitudes();
    size_t emissions = 0;
    for (size_t cell = 1; cell < ix.n_cells(); cell += 2) {
        const double u = rng.uniform();
        if (cell != trigger) {
            continue;  // no Fluor amplitude can exist off the trigger cell
        }
        const uint64_t stride = ix.stride(cell);
        const uint64_t block = stride * 2;
        const uint64_t n_hi = ix.dim() / block;
        double p = 0.0;
        for (uint64_t hi = 0; hi < n_hi; ++hi) {
            const uint64_t base = hi * block;
            for (uint64_t rest = 0; rest < stride; ++rest) {
                p += std::norm(amps[base + rest]);  // Down component
            }
        }
        const bool click = u < p;
        const uint64_t zero_off = click ? stride : 0;
        for (uint64_t hi = 0; hi < n_hi; ++hi) {
            const uint64_t base = hi * block + zero_off;
            for (uint64_t rest = 0; rest < stride; ++rest) {
                amps[base + rest] = 0.0;
            }
        }
        if (click) {
            ++emissions;
        }
        state.renormalize();
    }
    return emissions;
}

}  // namespace

ReadoutResult fluorescence_readout(QuantumState &state, const Layout &layout, size_t qubit,
                                   size_t cycles, Rng &rng, const GateLibrary &lib) {
    GateSpec spec;
    spec.kind = GateSpec::Kind::OneQubit;
    spec.target = qubit;
    spec.u = gates::readout_swap();
    spec.u_label = "FL";
    AssembledGate gate = lib.assemble(layout, spec);
    if (gate.entry && !gate.entry->trigger.one_reads_down) {
        // decay lands on Down; fluorescence cycles close only when Down
        // represents logical 1
        throw Error("readout: library entry orientation cannot sustain fluorescence cycles");
    }
    const size_t trigger = trigger_cell_at_slot(gate, layout);

    ReadoutResult result;
    for (size_t c = 0; c < cycles; ++c) {
        if (state.mode() == Mode::ThreeLevel) {
            for (size_t i = 0; i <= gate.slot_index; ++i) {
                apply_rule(state, gate.pulses[i]);
            }
            result.emissions += decay_channel(state, rng);
        } else {
            for (size_t i = 0; i < gate.slot_index; ++i) {
                apply_rule(state, gate.pulses[i]);
            }
            result.emissions += fused_decay(state, trigger, rng);
        }
        for (size_t i = gate.slot_index + 1; i < gate.pulses.size(); ++i) {
            apply_rule(state, gate.pulses[i]);
        }
    }
    result.bit = result.emissions > 0 ? 1 : 0;
    return result;
}

ReadoutResult fluorescence_readout(QuantumState &state, const Layout &layout, size_t qubit,
                                   size_t cycles, uint64_t seed, const GateLibrary &lib) {
    Rng rng(seed);
    return fluorescence_readout(state, layout, qubit, cycles, rng, lib);
}

}  // namespace gqca
