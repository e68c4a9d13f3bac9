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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gqca/engine.hpp"
#include "gqca/parallel.hpp"

using namespace gqca;

namespace {

const GateLibrary &library() {
    static GateLibrary lib = GateLibrary::load();
    return lib;
}

// circuit-level reference run of the per-gap program: returns the disable bit
int run_bits(const BitCircuit &c, const ParallelLayout &lay, size_t label) {
    std::vector<int> bits(3 + 2 * lay.label_width, 0);
    for (size_t k = 0; k < lay.label_width; ++k) {
        bits[lay.label_bit(k)] = static_cast<int>((label >> k) & 1);
    }
    apply_circuit(bits, c);
    return bits[ParallelLayout::kDisable];
}

}  // namespace

TEST_CASE("predicate literals round-trip and evaluate") {
    EnablePredicate all = EnablePredicate::from_literal("all");
    CHECK(all.evaluate(7));
    EnablePredicate single = EnablePredicate::from_literal("single:3");
    CHECK(single.evaluate(3));
    CHECK(!single.evaluate(2));
    EnablePredicate pow2 = EnablePredicate::from_literal("pow2:2");
    CHECK(pow2.evaluate(0));
    CHECK(pow2.evaluate(4));
    CHECK(!pow2.evaluate(6));
    EnablePredicate iv = EnablePredicate::from_literal("interval:2:5");
    CHECK(iv.evaluate(2));
    CHECK(iv.evaluate(5));
    CHECK(!iv.evaluate(1));
    CHECK(!iv.evaluate(6));
    CHECK(iv.literal() == "interval:2:5");
    CHECK_THROWS_AS(EnablePredicate::from_literal("interval:5:2"), ParseError);
    CHECK_THROWS_AS(EnablePredicate::from_literal("bogus"), ParseError);
}

TEST_CASE("layout: unique labels, structure, overhead growth") {
    double prev = 0.0;
    for (size_t n : {1u, 4u, 8u, 32u}) {
        ParallelLayout lay = build_parallel_layout(n);
        CHECK(lay.n_qubits == n);
        CHECK((size_t{1} << lay.label_width) >= n);
        CHECK(lay.gaps.size() == n);
        CHECK(lay.qubit_slots.size() == n);
        CHECK(lay.n_cells >= n * lay.unit_cells);
        CHECK((lay.overhead_factor > prev || n == 1));
        prev = lay.overhead_factor;
        // every register slot is even, the CU home odd
        for (const GapRegister &reg : lay.gaps) {
            CHECK(reg.disable % 2 == 0);
            CHECK(reg.cu % 2 == 1);
        }
    }
    CHECK(build_parallel_layout(4).label_width == 2);
    CHECK(build_parallel_layout(1).label_width == 1);
}

TEST_CASE("initial config decodes back and labels are the gap indices") {
    ParallelLayout lay = build_parallel_layout(4);
    std::vector<int> qs = {1, 0, 1, 1};
    CellConfig c = lay.initial_config(qs);
    CHECK(lay.decode_qubits(c) == qs);
    validate_config(c, Mode::TwoLevel);
}

TEST_CASE("predicate circuits compute the negated predicate on every label") {
    for (size_t n : {2u, 4u, 8u, 16u}) {
        ParallelLayout lay = build_parallel_layout(n);
        std::vector<EnablePredicate> preds;
        preds.push_back(EnablePredicate::from_literal("all"));
        for (size_t l = 0; l < n; ++l) {
            preds.push_back(EnablePredicate::from_literal("single:" + std::to_string(l)));
        }
        for (size_t p = 0; p <= lay.label_width; ++p) {
            preds.push_back(EnablePredicate::from_literal("pow2:" + std::to_string(p)));
        }
        for (size_t lo = 0; lo < n; lo += 2) {
            for (size_t hi = lo; hi < n; hi += 3) {
                preds.push_back(
                    EnablePredicate::from_literal("interval:" + std::to_string(lo) + ":" +
                                                  std::to_string(hi)));
            }
        }
        EnablePredicate table;
        table.kind = EnablePredicate::Kind::CustomTable;
        for (size_t l = 0; l < n; ++l) {
            table.table.push_back(l % 3 == 1);
        }
        preds.push_back(table);
        for (const EnablePredicate &pred : preds) {
            PredicateProgram prog = compile_predicate(pred, lay, library());
            for (size_t label = 0; label < n; ++label) {
                INFO(pred.literal(), " label=", label);
                REQUIRE(run_bits(prog.compute, lay, label) == (pred.evaluate(label) ? 0 : 1));
            }
            // the reversed program restores every scratch bit
            for (size_t label = 0; label < n; ++label) {
                std::vector<int> bits(3 + 2 * lay.label_width, 0);
                for (size_t k = 0; k < lay.label_width; ++k) {
                    bits[lay.label_bit(k)] = static_cast<int>((label >> k) & 1);
                }
                std::vector<int> want = bits;
                apply_circuit(bits, prog.compute);
                apply_circuit(bits, reversed_circuit(prog.compute));
                REQUIRE(bits == want);
            }
        }
    }
}

TEST_CASE("parallel step lands the gate exactly at enabled gaps and restores state") {
    const GateLibrary &lib = library();
    for (size_t n : {2u, 4u}) {
        ParallelLayout lay = build_parallel_layout(n);
        std::vector<EnablePredicate> preds = {
            EnablePredicate::from_literal("all"),
            EnablePredicate::from_literal("single:" + std::to_string(n - 1)),
            EnablePredicate::from_literal("pow2:1"),
            EnablePredicate::from_literal("interval:1:" + std::to_string(n - 1)),
        };
        for (const EnablePredicate &pred : preds) {
            std::vector<int> qs(n, 0);
            CellConfig start = lay.initial_config(qs);
            auto [out, budget] = run_parallel_step(lay, lib, start, gates::pauli_x(), "INV",
                                                   pred);
            INFO(pred.literal(), " n=", n);
            auto values = lay.decode_qubits(out);
            for (size_t g = 0; g < n; ++g) {
                REQUIRE(values[g] == (pred.evaluate(g) ? 1 : 0));
            }
            // the rest of the array is restored bit-exactly
            CellConfig expect = lay.initial_config(values);
            REQUIRE(out == expect);
            CHECK(budget.uncompute == budget.predicate_compute);
        }
    }
}

TEST_CASE("tau scales with the label width, not the machine size") {
    const GateLibrary &lib = library();
    std::vector<size_t> ns = {4, 8, 16, 32, 64, 128, 256};
    auto rows = scaling_report("single", ns, lib, gates::pauli_x(), "INV");
    // least squares fit tau = c1*log2(N) + c2
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const ScalingRow &row : rows) {
        double x = std::log2(static_cast<double>(row.n_qubits));
        double y = static_cast<double>(row.tau);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double m = rows.size();
    double c1 = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    double c2 = (sy - c1 * sx) / m;
    CHECK(c1 > 0.0);
    for (const ScalingRow &row : rows) {
        double fit = c1 * std::log2(static_cast<double>(row.n_qubits)) + c2;
        double resid = std::abs(fit - static_cast<double>(row.tau)) /
                       static_cast<double>(row.tau);
        INFO("N=", row.n_qubits, " tau=", row.tau, " fit=", fit);
        CHECK(resid < 0.10);
    }
    // the all-enabled family needs no predicate pulses at any size
    auto all_rows = scaling_report("all", ns, lib, gates::pauli_x(), "INV");
    for (const ScalingRow &row : all_rows) {
        CHECK(row.tau == 0);
    }
}

TEST_CASE("dense custom tables are flagged, not silently run") {
    const GateLibrary &lib = library();
    ParallelLayout lay = build_parallel_layout(16);
    EnablePredicate table;
    table.kind = EnablePredicate::Kind::CustomTable;
    for (size_t l = 0; l < 16; ++l) {
        table.table.push_back(l % 2 == 0);  // dense: half the labels
    }
    PredicateProgram prog = compile_predicate(table, lay, lib);
    CHECK(prog.exceeds_budget);
    CHECK_THROWS_AS(run_parallel_step(lay, lib, lay.initial_config(std::vector<int>(16, 0)),
                                      gates::pauli_x(), "INV", table),
                    BudgetExceeded);
    // wrong-sized tables hit the work-pad capacity error
    EnablePredicate bad;
    bad.kind = EnablePredicate::Kind::CustomTable;
    bad.table = {true, false};
    CHECK_THROWS_AS(compile_predicate(bad, lay, lib), Error);
}

TEST_CASE("parallel beats the serial walk from eight qubits up") {
    const GateLibrary &lib = library();
    for (size_t n : {8u, 16u, 64u}) {
        ParallelLayout lay = build_parallel_layout(n);
        ParallelStep step = plan_parallel_step(lay, lib, gates::pauli_x(), "INV",
                                               EnablePredicate::from_literal("all"));
        size_t serial = serial_baseline_pulses(n, lib);
        INFO("N=", n, " parallel=", step.budget.total(), " serial=", serial);
        CHECK(step.budget.total() < serial);
    }
}
