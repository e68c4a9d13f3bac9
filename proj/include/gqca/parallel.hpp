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
#include <utility>
#include <vector>

#include "gqca/circuit.hpp"
#include "gqca/library.hpp"

namespace gqca {

/// Which sub-computers enable their gate, as a predicate over gap labels.
struct EnablePredicate {
    enum class Kind { All, Single, EveryPow2, Interval, CustomTable };
    Kind kind = Kind::All;
    size_t label = 0;          // Single
    size_t pow = 0;            // EveryPow2: labels divisible by 2^pow
    size_t lo = 0, hi = 0;     // Interval, inclusive bounds
    std::vector<bool> table;   // CustomTable over labels 0..N-1

    bool evaluate(size_t value) const;

    /// all | single:K | pow2:P | interval:LO:HI
    static EnablePredicate from_literal(const std::string &literal);
    std::string literal() const;
};

/// Per-gap sub-computer register. All slots are absolute block starts; all
/// bits are coded four-cell blocks. Physical order ascending:
/// disable, result, store, chain head..chain tail, label LSB appears last
/// (the chain interleaves with the labels), three reserved delay bits, CU.
struct GapRegister {
    size_t disable = 0;            // written to the negated predicate
    size_t result = 0;             // scratch accumulating the predicate
    size_t store = 0;              // holds the first comparator half
    std::vector<size_t> chain;     // borrow bits, head (B_w) first
    std::vector<size_t> labels;    // L_0 (LSB) .. L_{w-1}
    std::vector<size_t> aux;       // reserved delay bits (disable is the fourth)
    size_t cu = 0;                 // CU home slot
};

struct ParallelLayout {
    size_t n_qubits = 0;
    size_t label_width = 0;
    size_t unit_cells = 0;
    size_t n_cells = 0;
    std::vector<size_t> qubit_slots;
    std::vector<GapRegister> gaps;
    double overhead_factor = 0.0;  // total cells over the serial layout's

    /// Coded initial configuration: qubit values as given, labels set to
    /// each gap's index, every other register bit 0, one CU per gap.
    CellConfig initial_config(const std::vector<int> &qubit_values) const;

    /// Reads the main qubits back out of a coded configuration.
    std::vector<int> decode_qubits(const CellConfig &config) const;

    /// Bit ids for the predicate circuits: 0 disable, 1 result, 2 store,
    /// 3..3+w-1 chain head..tail, 3+w..3+2w-1 labels LSB..MSB.
    size_t slot_of_bit(size_t gap, size_t bit) const;
    static constexpr size_t kDisable = 0, kResult = 1, kStore = 2;
    size_t chain_bit(size_t k) const { return 3 + (label_width - k); }  // B_k, k = 1..w
    size_t label_bit(size_t k) const { return 3 + label_width + k; }   // L_k
};

/// Throws Error when the gap cannot host the label register.
ParallelLayout build_parallel_layout(size_t n_qubits);

struct PulseBudget {
    size_t predicate_compute = 0;
    size_t cu_dispatch = 0;
    size_t gate = 0;
    size_t uncompute = 0;  // always equals predicate_compute (reverse program)
    size_t total() const { return predicate_compute + cu_dispatch + gate + uncompute; }
};

struct PredicateProgram {
    BitCircuit compute;          // per-gap bit circuit, ends writing disable
    size_t tau_pulses = 0;       // compiled pulse count of the compute phase
    bool exceeds_budget = false; // requires a pulse stream not sublinear in N
};

PredicateProgram compile_predicate(const EnablePredicate &pred, const ParallelLayout &layout,
                                   const GateLibrary &lib);

struct ParallelStep {
    PulseSequence stream;  // one global broadcast, identical for every gap
    PulseBudget budget;
};

/// Assembles the full broadcast stream: predicate compute, conditional gate
/// dispatch against each gap's left-neighbor qubit, and the reverse of the
/// compute phase.
ParallelStep plan_parallel_step(const ParallelLayout &layout, const GateLibrary &lib,
                                const Gate1 &u, const std::string &u_label,
                                const EnablePredicate &pred);

/// Runs the stream on a coded configuration. The gate lands exactly at
/// predicate-true gaps; every sub-computer region is restored bit-exactly.
/// Throws BudgetExceeded for predicates flagged by the compiler.
std::pair<CellConfig, PulseBudget> run_parallel_step(const ParallelLayout &layout,
                                                     const GateLibrary &lib,
                                                     const CellConfig &config, const Gate1 &u,
                                                     const std::string &u_label,
                                                     const EnablePredicate &pred);

struct ScalingRow {
    size_t n_qubits = 0;
    size_t tau = 0;
    size_t total_pulses = 0;
    double overhead_factor = 0.0;
};

/// Representative predicate of each named family at size N: all; single
/// N-1; pow2 with p = 1; interval [N/4, N/2].
EnablePredicate family_representative(const std::string &family, size_t n_qubits);

std::vector<ScalingRow> scaling_report(const std::string &family, const std::vector<size_t> &ns,
                                       const GateLibrary &lib, const Gate1 &u,
                                       const std::string &u_label);

std::string scaling_csv(const std::vector<ScalingRow> &rows);

/// Pulse count for applying the gate to every qubit serially with a single
/// CU walking a plain N-qubit array; the comparison point for the parallel
/// stream's total.
size_t serial_baseline_pulses(size_t n_qubits, const GateLibrary &lib);

}  // namespace gqca
