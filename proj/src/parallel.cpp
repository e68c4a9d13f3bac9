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

#include "gqca/parallel.hpp"

#include <algorithm>
#include <sstream>

#include "gqca/engine.hpp"
#include "gqca/transport.hpp"

namespace gqca {

namespace {

constexpr size_t kSlotPitch = 8;  // block plus minimum spacer

const CellLevel kBitZero[kQubitCells] = {CellLevel::Up, CellLevel::Up, CellLevel::Down,
                                         CellLevel::Down};
const CellLevel kBitOne[kQubitCells] = {CellLevel::Down, CellLevel::Down, CellLevel::Up,
                                        CellLevel::Up};
const CellLevel kCu[kCuCells] = {CellLevel::Up,   CellLevel::Up, CellLevel::Down,
                                 CellLevel::Down, CellLevel::Up, CellLevel::Up};

void put_bit(CellConfig &config, size_t slot, int value) {
    const CellLevel *p = value ? kBitOne : kBitZero;
    for (size_t k = 0; k < kQubitCells; ++k) {
        config[slot + k] = p[k];
    }
}

int get_bit(const CellConfig &config, size_t slot) {
    bool is0 = true, is1 = true;
    for (size_t k = 0; k < kQubitCells; ++k) {
        is0 = is0 && config[slot + k] == kBitZero[k];
        is1 = is1 && config[slot + k] == kBitOne[k];
    }
    if (is0) return 0;
    if (is1) return 1;
    throw MalformedCode(slot, "register block is not a coded bit");
}

/// Emits one global stream with chained CU transports: after a gate body the
/// CU is carried straight to the next gate's position instead of returning
/// home. `cum` is the cumulative transport count; odd values flip every
/// block's parity, so segments emitted there are parity-swapped.
class StreamPlanner {
  public:
    void set_phase(size_t *counter) { phase_ = counter; }

    void transport_to(long k) {
        long delta = k - cum_;
        if (delta == 0) {
            return;
        }
        PulseSequence seg = transport(delta);
        if (cum_ % 2 != 0) {
            seg = parity_swapped(seg);
        }
        append(seg);
        cum_ = k;
    }

    /// target_rel and cu_home_rel are unit-relative block starts.
    void gate(const LibraryEntry &entry, long target_rel, long cu_home_rel, const Gate1 &u,
              const std::string &label) {
        long k = (entry.cu_offset - (cu_home_rel - target_rel)) / 2;
        transport_to(k);
        Gate1 cell_gate = GateLibrary::slot_gate(entry, u);
        PulseSequence body = substitute_slot(entry.sequence, entry.slot_index, cell_gate, label);
        if (cum_ % 2 != 0) {
            body = parity_swapped(body);
        }
        append(body);
    }

    void finish() { transport_to(0); }

    const PulseSequence &stream() const { return stream_; }

  private:
    void append(const PulseSequence &seg) {
        stream_.insert(stream_.end(), seg.begin(), seg.end());
        if (phase_) {
            *phase_ += seg.size();
        }
    }

    PulseSequence stream_;
    long cum_ = 0;
    size_t *phase_ = nullptr;
};

/// Borrow-chain builders. Each chain bit is stored in the polarity that
/// makes the next step a plain sense-adjusted Toffoli; `plus` says whether
/// the stored bit equals the borrow or its complement.
struct ChainResult {
    bool plus = true;
};

// borrow of (label - bound): b' = (~x & b) where the bound bit is 0,
// (~x | b) where it is 1
ChainResult chain_ge(BitCircuit &c, const ParallelLayout &lay, size_t bound) {
    const size_t w = lay.label_width;
    bool plus = true;
    bool live = false;
    for (size_t k = 0; k < w; ++k) {
        const bool bk = (bound >> k) & 1;
        if (!live) {
            if (bk) {
                // b' = ~x: store the complement x
                c.push_back({BitGate::Op::Cnot, lay.chain_bit(k + 1), lay.label_bit(k), 0,
                             true, true});
                plus = false;
                live = true;
            }
            continue;
        }
        if (!bk) {
            // b' = ~x & b
            c.push_back({BitGate::Op::Toffoli, lay.chain_bit(k + 1), lay.chain_bit(k),
                         lay.label_bit(k), plus, false});
            plus = true;
        } else {
            // ~b' = x & ~b
            c.push_back({BitGate::Op::Toffoli, lay.chain_bit(k + 1), lay.chain_bit(k),
                         lay.label_bit(k), !plus, true});
            plus = false;
        }
        // the chain must land on the head bit; carry constant borrows forward
    }
    return {plus};
}

// borrow of (bound - label): b' = (x & b) where the bound bit is 1,
// (x | b) where it is 0
ChainResult chain_le(BitCircuit &c, const ParallelLayout &lay, size_t bound) {
    const size_t w = lay.label_width;
    bool plus = true;
    bool live = false;
    for (size_t k = 0; k < w; ++k) {
        const bool bk = (bound >> k) & 1;
        if (!live) {
            if (!bk) {
                // b' = x
                c.push_back({BitGate::Op::Cnot, lay.chain_bit(k + 1), lay.label_bit(k), 0,
                             true, true});
                plus = true;
                live = true;
            }
            continue;
        }
        if (bk) {
            c.push_back({BitGate::Op::Toffoli, lay.chain_bit(k + 1), lay.chain_bit(k),
                         lay.label_bit(k), plus, true});
            plus = true;
        } else {
            c.push_back({BitGate::Op::Toffoli, lay.chain_bit(k + 1), lay.chain_bit(k),
                         lay.label_bit(k), !plus, false});
            plus = false;
        }
    }
    return {plus};
}

bool head_true_sense(ChainResult r) {
    // comparison holds iff the borrow is 0: bit == (plus ? 0 : 1)
    return !r.plus;
}

struct ChainUse {
    ChainResult result;
    size_t head_bit;  // the chain bit the comparison landed on
};

/// Runs a chain builder and patches the gap when low bound bits keep the
/// borrow constant-zero: the comparison then lives on a shallower chain bit
/// and is copied forward so it always ends at the head.
template <typename F>
ChainUse run_chain(BitCircuit &c, const ParallelLayout &lay, F &&builder, size_t bound) {
    size_t before = c.size();
    ChainResult r = builder(c, lay, bound);
    const size_t w = lay.label_width;
    if (c.size() == before) {
        // borrow identically zero: the comparison is constantly true
        return {ChainResult{true}, 0};
    }
    // builders always end at chain_bit(w)
    (void)w;
    return {r, lay.chain_bit(lay.label_width)};
}

}  // namespace

bool EnablePredicate::evaluate(size_t value) const {
    switch (kind) {
        case Kind::All: return true;
        case Kind::Single: return value == label;
        case Kind::EveryPow2:
            return pow >= 8 * sizeof(size_t) || (value & ((size_t{1} << pow) - 1)) == 0;
        case Kind::Interval: return value >= lo && value <= hi;
        case Kind::CustomTable: return value < table.size() && table[value];
    }
    return false;
}

EnablePredicate EnablePredicate::from_literal(const std::string &literal) {
    EnablePredicate p;
    if (literal == "all") {
        p.kind = Kind::All;
        return p;
    }
    auto num = [&](const std::string &s) -> size_t {
        size_t used = 0;
        size_t v = std::stoul(s, &used);
        if (used != s.size()) {
            throw ParseError("predicate literal: bad number '" + s + "'");
        }
        return v;
    };
    if (literal.rfind("single:", 0) == 0) {
        p.kind = Kind::Single;
        p.label = num(literal.substr(7));
        return p;
    }
    if (literal.rfind("pow2:", 0) == 0) {
        p.kind = Kind::EveryPow2;
        p.pow = num(literal.substr(5));
        return p;
    }
    if (literal.rfind("interval:", 0) == 0) {
        std::string rest = literal.substr(9);
        size_t colon = rest.find(':');
        if (colon == std::string::npos) {
            throw ParseError("interval literal needs LO:HI");
        }
        p.kind = Kind::Interval;
        p.lo = num(rest.substr(0, colon));
        p.hi = num(rest.substr(colon + 1));
        if (p.lo > p.hi) {
            throw ParseError("interval literal: lo > hi");
        }
        return p;
    }
    throw ParseError("unknown predicate literal '" + literal + "'");
}

std::string EnablePredicate::literal() const {
    switch (kind) {
        case Kind::All: return "all";
        case Kind::Single: return "single:" + std::to_string(label);
        case Kind::EveryPow2: return "pow2:" + std::to_string(pow);
        case Kind::Interval:
            return "interval:" + std::to_string(lo) + ":" + std::to_string(hi);
        case Kind::CustomTable: return "table";
    }
    return "?";
}

ParallelLayout build_parallel_layout(size_t n_qubits) {
    if (n_qubits < 1) {
        throw Error("parallel layout: need at least one qubit");
    }
    ParallelLayout lay;
    lay.n_qubits = n_qubits;
    size_t w = 1;
    while ((size_t{1} << w) < n_qubits) {
        ++w;
    }
    lay.label_width = w;
    // every register slot keeps a 12-cell hole above it so the CU can work
    // there; the slot pitch is 16 cells
    lay.unit_cells = 32 * w + 108;
    const size_t margin_left = 2;
    const size_t margin_right = 16 * w + 50;
    lay.n_cells = margin_left + n_qubits * lay.unit_cells + margin_right;

    for (size_t g = 0; g < n_qubits; ++g) {
        const size_t base = margin_left + g * lay.unit_cells;
        lay.qubit_slots.push_back(base);
        GapRegister reg;
        reg.disable = base + 8;
        reg.result = base + 24;
        reg.store = base + 40;
        for (size_t k = w; k >= 1; --k) {
            reg.chain.push_back(base + 56 + 32 * (w - k));  // B_w .. B_1
        }
        for (size_t k = 0; k < w; ++k) {
            reg.labels.push_back(base + 32 * w + 40 - 32 * k);  // L_0 .. L_{w-1}
        }
        reg.aux = {base + 32 * w + 56, base + 32 * w + 72, base + 32 * w + 88};
        reg.cu = base + 32 * w + 97;
        lay.gaps.push_back(std::move(reg));
    }

    const size_t serial_cells = margin_left + n_qubits * kSlotPitch + 5 + kCuCells + 2;
    lay.overhead_factor = static_cast<double>(lay.n_cells) / static_cast<double>(serial_cells);
    return lay;
}

CellConfig ParallelLayout::initial_config(const std::vector<int> &qubit_values) const {
    if (qubit_values.size() != n_qubits) {
        throw InvalidConfig("parallel config: qubit value count mismatch");
    }
    CellConfig config = CellConfig::all_down(n_cells);
    for (size_t g = 0; g < n_qubits; ++g) {
        put_bit(config, qubit_slots[g], qubit_values[g]);
        const GapRegister &reg = gaps[g];
        put_bit(config, reg.disable, 0);
        put_bit(config, reg.result, 0);
        put_bit(config, reg.store, 0);
        for (size_t slot : reg.chain) {
            put_bit(config, slot, 0);
        }
        for (size_t k = 0; k < label_width; ++k) {
            put_bit(config, reg.labels[k], static_cast<int>((g >> k) & 1));
        }
        for (size_t slot : reg.aux) {
            put_bit(config, slot, 0);
        }
        for (size_t k = 0; k < kCuCells; ++k) {
            config[reg.cu + k] = kCu[k];
        }
    }
    return config;
}

std::vector<int> ParallelLayout::decode_qubits(const CellConfig &config) const {
    std::vector<int> values;
    values.reserve(n_qubits);
    for (size_t slot : qubit_slots) {
        values.push_back(get_bit(config, slot));
    }
    return values;
}

size_t ParallelLayout::slot_of_bit(size_t gap, size_t bit) const {
    const GapRegister &reg = gaps.at(gap);
    if (bit == kDisable) return reg.disable;
    if (bit == kResult) return reg.result;
    if (bit == kStore) return reg.store;
    if (bit < 3 + label_width) return reg.chain.at(bit - 3);
    if (bit < 3 + 2 * label_width) return reg.labels.at(bit - 3 - label_width);
    throw Error("slot_of_bit: bit id out of range");
}

namespace {

/// The per-gap predicate circuit: comparator chains into the store/result
/// scratch bits, then the bridge write setting disable = NOT predicate.
BitCircuit predicate_circuit(const EnablePredicate &pred, const ParallelLayout &lay) {
    BitCircuit c;
    const size_t w = lay.label_width;
    const size_t max_label = (size_t{1} << w) - 1;

    auto store_head = [&](ChainResult r) {
        c.push_back({BitGate::Op::Cnot, ParallelLayout::kStore, lay.chain_bit(w), 0,
                     head_true_sense(r), true});
    };
    auto result_from_store = [&]() {
        c.push_back({BitGate::Op::Cnot, ParallelLayout::kResult, ParallelLayout::kStore, 0,
                     true, true});
    };
    auto disable_from_result = [&]() {
        c.push_back({BitGate::Op::Cnot, ParallelLayout::kDisable, ParallelLayout::kResult, 0,
                     false, true});
    };
    auto with_chain = [&](auto builder, size_t bound, auto &&use_head) {
        size_t mark = c.size();
        ChainResult r = builder(c, lay, bound);
        BitCircuit chain(c.begin() + static_cast<long>(mark), c.end());
        use_head(r);
        BitCircuit rev = reversed_circuit(chain);
        c.insert(c.end(), rev.begin(), rev.end());
    };

    switch (pred.kind) {
        case EnablePredicate::Kind::All:
            return c;
        case EnablePredicate::Kind::Single:
        case EnablePredicate::Kind::Interval: {
            size_t lo = pred.kind == EnablePredicate::Kind::Single ? pred.label : pred.lo;
            size_t hi = pred.kind == EnablePredicate::Kind::Single ? pred.label : pred.hi;
            if (lo > max_label) {
                throw Error("predicate: bound " + std::to_string(lo) +
                            " exceeds the label range");
            }
            hi = std::min(hi, max_label);
            if (lo == 0 && hi == max_label) {
                return c;
            }
            if (lo == 0) {
                with_chain(chain_le, hi, [&](ChainResult r) { store_head(r); });
                result_from_store();
            } else if (hi == max_label) {
                with_chain(chain_ge, lo, [&](ChainResult r) { store_head(r); });
                result_from_store();
            } else {
                with_chain(chain_ge, lo, [&](ChainResult r) { store_head(r); });
                with_chain(chain_le, hi, [&](ChainResult r) {
                    c.push_back({BitGate::Op::Toffoli, ParallelLayout::kResult,
                                 lay.chain_bit(w), ParallelLayout::kStore, head_true_sense(r),
                                 true});
                });
            }
            disable_from_result();
            return c;
        }
        case EnablePredicate::Kind::EveryPow2: {
            const size_t p = std::min(pred.pow, w);
            if (p == 0) {
                return c;
            }
            size_t mark = c.size();
            // complemented OR chain over the low p label bits, carried on to
            // the chain head
            c.push_back({BitGate::Op::Cnot, lay.chain_bit(1), lay.label_bit(0), 0, false,
                         true});
            for (size_t k = 1; k < w; ++k) {
                if (k < p) {
                    c.push_back({BitGate::Op::Toffoli, lay.chain_bit(k + 1), lay.chain_bit(k),
                                 lay.label_bit(k), true, false});
                } else {
                    c.push_back({BitGate::Op::Toffoli, lay.chain_bit(k + 1), lay.chain_bit(k),
                                 lay.label_bit(k), true, true});
                    c.push_back({BitGate::Op::Toffoli, lay.chain_bit(k + 1), lay.chain_bit(k),
                                 lay.label_bit(k), true, false});
                }
            }
            BitCircuit chain(c.begin() + static_cast<long>(mark), c.end());
            c.push_back({BitGate::Op::Cnot, ParallelLayout::kStore, lay.chain_bit(w), 0, true,
                         true});
            BitCircuit rev = reversed_circuit(chain);
            c.insert(c.end(), rev.begin(), rev.end());
            result_from_store();
            disable_from_result();
            return c;
        }
        case EnablePredicate::Kind::CustomTable: {
            if (pred.table.size() != lay.n_qubits) {
                throw Error("custom table must cover exactly the " +
                            std::to_string(lay.n_qubits) + " labels (work-pad capacity)");
            }
            for (size_t l = 0; l < pred.table.size(); ++l) {
                if (!pred.table[l]) {
                    continue;
                }
                size_t mark = c.size();
                c.push_back({BitGate::Op::Cnot, lay.chain_bit(1), lay.label_bit(0), 0,
                             ((l >> 0) & 1) != 0, true});
                for (size_t k = 1; k < w; ++k) {
                    c.push_back({BitGate::Op::Toffoli, lay.chain_bit(k + 1), lay.chain_bit(k),
                                 lay.label_bit(k), true, ((l >> k) & 1) != 0});
                }
                BitCircuit chain(c.begin() + static_cast<long>(mark), c.end());
                // disjoint minterms accumulate by XOR into the store bit
                c.push_back({BitGate::Op::Cnot, ParallelLayout::kStore, lay.chain_bit(w), 0,
                             true, true});
                BitCircuit rev = reversed_circuit(chain);
                c.insert(c.end(), rev.begin(), rev.end());
            }
            result_from_store();
            disable_from_result();
            return c;
        }
    }
    return c;
}

}  // namespace

ParallelStep plan_parallel_step(const ParallelLayout &lay, const GateLibrary &lib,
                                const Gate1 &u, const std::string &u_label,
                                const EnablePredicate &pred) {
    BitCircuit circuit = predicate_circuit(pred, lay);

    // unit-relative geometry is identical for every gap; plan against gap 0
    const size_t base = lay.qubit_slots.at(0);
    auto rel = [&](size_t abs) { return static_cast<long>(abs) - static_cast<long>(base); };
    const GapRegister &reg = lay.gaps.at(0);
    const long cu_home = rel(reg.cu);

    const LibraryEntry &cnot1 = lib.find(GateSpec::Kind::ControlledU, "1", {16});
    const LibraryEntry &cnot0 = lib.find(GateSpec::Kind::ControlledU, "0", {16});
    auto ccx = [&](bool s_far, bool s_near) -> const LibraryEntry & {
        return lib.find(GateSpec::Kind::CCU,
                        std::string(s_far ? "1" : "0") + (s_near ? "1" : "0"), {32, 16});
    };

    ParallelStep step;
    StreamPlanner planner;
    planner.set_phase(&step.budget.predicate_compute);
    auto bit_rel = [&](size_t bit) { return rel(lay.slot_of_bit(0, bit)); };
    for (const BitGate &g : circuit) {
        switch (g.op) {
            case BitGate::Op::X: {
                planner.gate(lib.find(GateSpec::Kind::OneQubit, "", {}), bit_rel(g.target),
                             cu_home, gates::pauli_x(), "INV");
                break;
            }
            case BitGate::Op::Cnot: {
                long toff = bit_rel(g.target);
                long coff = bit_rel(g.c1) - toff;
                const LibraryEntry &entry =
                    lib.find(GateSpec::Kind::ControlledU, g.s1 ? "1" : "0", {coff});
                planner.gate(entry, toff, cu_home, gates::pauli_x(), "INV");
                break;
            }
            case BitGate::Op::Toffoli: {
                long toff = bit_rel(g.target);
                long o1 = bit_rel(g.c1) - toff;
                long o2 = bit_rel(g.c2) - toff;
                if ((o1 != 32 || o2 != 16) && (o1 != 16 || o2 != 32)) {
                    throw Error("predicate circuit: Toffoli operands are not consecutive slots");
                }
                bool s_far = o1 > o2 ? g.s1 : g.s2;
                bool s_near = o1 > o2 ? g.s2 : g.s1;
                planner.gate(ccx(s_far, s_near), toff, cu_home, gates::pauli_x(), "INV");
                break;
            }
        }
    }
    planner.finish();
    const PulseSequence compute_stream = planner.stream();
    (void)cnot1;
    (void)cnot0;

    // conditional dispatch against the left-neighbor qubit
    planner.set_phase(&step.budget.cu_dispatch);
    {
        const LibraryEntry &dispatch = lib.find(GateSpec::Kind::ControlledU, "0", {8});
        long toff = 0;  // the unit's own qubit
        long k = (dispatch.cu_offset - (cu_home - toff)) / 2;
        planner.transport_to(k);
        planner.set_phase(&step.budget.gate);
        planner.gate(dispatch, toff, cu_home, u, u_label);
        planner.set_phase(&step.budget.cu_dispatch);
        planner.finish();
    }

    step.stream = planner.stream();
    PulseSequence uncompute = inverse_sequence(compute_stream);
    step.stream.insert(step.stream.end(), uncompute.begin(), uncompute.end());
    step.budget.uncompute = uncompute.size();
    return step;
}

PredicateProgram compile_predicate(const EnablePredicate &pred, const ParallelLayout &lay,
                                   const GateLibrary &lib) {
    PredicateProgram prog;
    prog.compute = predicate_circuit(pred, lay);
    ParallelStep probe = plan_parallel_step(lay, lib, gates::pauli_x(), "INV", pred);
    prog.tau_pulses = probe.budget.predicate_compute;
    prog.exceeds_budget = prog.tau_pulses >= serial_baseline_pulses(lay.n_qubits, lib);
    return prog;
}

std::pair<CellConfig, PulseBudget> run_parallel_step(const ParallelLayout &lay,
                                                     const GateLibrary &lib,
                                                     const CellConfig &config, const Gate1 &u,
                                                     const std::string &u_label,
                                                     const EnablePredicate &pred) {
    PredicateProgram prog = compile_predicate(pred, lay, lib);
    if (prog.exceeds_budget) {
        throw BudgetExceeded("predicate '" + pred.literal() + "' needs " +
                             std::to_string(prog.tau_pulses) +
                             " pulses, not sublinear against the serial baseline");
    }
    ParallelStep step = plan_parallel_step(lay, lib, u, u_label, pred);
    CellConfig out = classical_apply_sequence(config, step.stream);
    return {std::move(out), step.budget};
}

EnablePredicate family_representative(const std::string &family, size_t n_qubits) {
    EnablePredicate pred;
    if (family == "all") {
        pred.kind = EnablePredicate::Kind::All;
    } else if (family == "single") {
        pred.kind = EnablePredicate::Kind::Single;
        pred.label = n_qubits - 1;
    } else if (family == "pow2") {
        pred.kind = EnablePredicate::Kind::EveryPow2;
        pred.pow = 1;
    } else if (family == "interval") {
        pred.kind = EnablePredicate::Kind::Interval;
        pred.lo = n_qubits / 4;
        pred.hi = n_qubits / 2;
    } else {
        throw Error("unknown predicate family '" + family + "'");
    }
    return pred;
}

std::vector<ScalingRow> scaling_report(const std::string &family, const std::vector<size_t> &ns,
                                       const GateLibrary &lib, const Gate1 &u,
                                       const std::string &u_label) {
    std::vector<ScalingRow> rows;
    for (size_t n : ns) {
        ParallelLayout lay = build_parallel_layout(n);
        EnablePredicate pred = family_representative(family, n);
        ParallelStep step = plan_parallel_step(lay, lib, u, u_label, pred);
        ScalingRow row;
        row.n_qubits = n;
        row.tau = step.budget.predicate_compute;
        row.total_pulses = step.budget.total();
        row.overhead_factor = lay.overhead_factor;
        rows.push_back(row);
    }
    return rows;
}

std::string scaling_csv(const std::vector<ScalingRow> &rows) {
    std::ostringstream os;
    os << "N,tau,total_pulses,overhead_factor\n";
    os.precision(6);
    for (const ScalingRow &row : rows) {
        os << row.n_qubits << "," << row.tau << "," << row.total_pulses << ","
           << row.overhead_factor << "\n";
    }
    return os.str();
}

size_t serial_baseline_pulses(size_t n_qubits, const GateLibrary &lib) {
    // one CU walks a plain array (slot pitch 8, CU home past the last
    // qubit) and applies the gate at every qubit, chaining its transports
    const LibraryEntry &gate = lib.find(GateSpec::Kind::OneQubit, "", {});
    const long cu_home = static_cast<long>(kSlotPitch * n_qubits) + 1;
    size_t pulses = 0;
    long cum = 0;
    for (size_t g = n_qubits; g-- > 0;) {
        long target = static_cast<long>(kSlotPitch * g);
        long k = (gate.cu_offset - (cu_home - target)) / 2;
        pulses += static_cast<size_t>(std::abs(k - cum));
        cum = k;
        pulses += gate.sequence.size();
    }
    pulses += static_cast<size_t>(std::abs(cum));
    return pulses;
}

}  // namespace gqca
