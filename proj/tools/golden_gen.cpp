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

// Regenerates the golden gate-sequence library. Synthesis runs offline; the
// checked-in artifacts carry integrity stamps and the test suite re-verifies
// them without re-searching.

#include <chrono>
#include <cstdio>
#include <string>

#include "gqca/library.hpp"
#include "gqca/synth.hpp"

using namespace gqca;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct EntryPlan {
    std::string name;
    std::string spec_literal;
    Layout search;
    Layout verify;
    std::vector<size_t> roles;
    size_t max_len = 45;
    bool classical_only = false;
    bool end_rules = false;
    std::vector<int> trigger_fields = {2};
    bool translation_check = true;
    size_t seeded_free_depth = 12;
    bool require_one_reads_down = false;
};

/// Local-dynamics alphabet: field 0 and +2 rules touch nothing in the
/// all-Down vacuum, so the found sequences stay margin independent. The
/// field -2 rules rewrite every spacer cell and are excluded from library
/// entries for that reason.
PulseSequence local_alphabet(bool end_rules) {
    PulseSequence a = {UpdateRule(CellType::A, 0), UpdateRule(CellType::B, 0),
                       UpdateRule(CellType::A, 2), UpdateRule(CellType::B, 2)};
    if (end_rules) {
        a.emplace_back(CellType::A, 1);
        a.emplace_back(CellType::A, -1);
        a.emplace_back(CellType::B, 1);
        a.emplace_back(CellType::B, -1);
    }
    return a;
}

LibraryEntry make_entry(const EntryPlan &plan) {
    auto t0 = std::chrono::steady_clock::now();
    SynthesisProblem prob;
    prob.layout = plan.search;
    prob.verify_layout = plan.verify;
    prob.target = GateSpec::from_literal(plan.spec_literal);
    prob.max_len = plan.max_len;
    prob.classical_only = plan.classical_only;
    prob.allow_end_rules = plan.end_rules;
    prob.trigger_fields = plan.trigger_fields;
    prob.translation_check = plan.translation_check;
    prob.alphabet = local_alphabet(plan.end_rules);
    prob.seeded_free_depth = plan.seeded_free_depth;
    prob.require_one_reads_down = plan.require_one_reads_down;

    auto res = synthesize(prob);
    if (!res) {
        throw Error("golden_gen: synthesis failed for " + plan.name);
    }
    std::printf("%-12s len=%zu slot=%zu trigger=%s%d oneDown=%d nodes=%zu err=%.2e leak=%.2e "
                "solidCU=%d %.1fs\n",
                plan.name.c_str(), res->sequence.size(), res->slot_index,
                res->trigger.kind == CellType::A ? "A" : "B", res->trigger.field,
                res->trigger.one_reads_down ? 1 : 0, res->nodes_expanded, res->action_error,
                res->leakage, res->solid_cu_intermediate ? 1 : 0, seconds_since(t0));
    std::fflush(stdout);

    LibraryEntry entry;
    entry.name = plan.name;
    entry.kind = prob.target.kind;
    entry.senses = prob.target.sense_signature();
    entry.layout = plan.verify;
    entry.roles = plan.roles;
    entry.sequence = res->sequence;
    entry.slot_index = res->slot_index;
    entry.trigger = res->trigger;
    size_t target_slot = plan.verify.qubit_slots.at(plan.roles.at(0));
    for (size_t i = 1; i < plan.roles.size(); ++i) {
        entry.control_offsets.push_back(
            static_cast<long>(plan.verify.qubit_slots.at(plan.roles.at(i))) -
            static_cast<long>(target_slot));
    }
    if (plan.verify.cu_slot) {
        entry.cu_offset = static_cast<long>(*plan.verify.cu_slot) -
                          static_cast<long>(target_slot);
    }
    return entry;
}

Layout make_layout(size_t n, std::vector<size_t> qubits, std::optional<size_t> cu) {
    Layout lay;
    lay.n_cells = n;
    lay.qubit_slots = std::move(qubits);
    lay.cu_slot = cu;
    lay.validate();
    return lay;
}

}  // namespace

int main(int argc, char **argv) {
    std::string dir = argc > 1 ? argv[1] : GateLibrary::default_dir();

    Layout roomy1 = make_layout(44, {12}, 21);
    Layout roomy2 = make_layout(50, {12, 20}, 29);
    Layout wide2 = make_layout(64, {12, 28}, 37);        // pair at the register pitch
    Layout wide3 = make_layout(96, {12, 28, 44}, 53);    // triple at the register pitch

    GateLibrary lib;
    auto add = [&](LibraryEntry e) {
        lib.add(std::move(e));
        lib.save(dir);
    };
    add(make_entry({"one_qubit", "X@0", roomy1, min_one_qubit_layout(), {0}, 21, false,
                    false, {2}, true, 12, true}));
    add(make_entry({"cu", "C-X@1,0", roomy2, min_two_qubit_layout(), {0, 1}, 35}));
    add(make_entry({"cu0", "C0-X@1,0", roomy2, min_two_qubit_layout(), {0, 1}, 35}));
    add(make_entry({"cu_wide", "C-X@1,0", wide2, wide2, {0, 1}, 57, false, false, {2}, true, 14}));
    add(make_entry({"cu_wide0", "C0-X@1,0", wide2, wide2, {0, 1}, 57, false, false, {2}, true, 14}));
    add(make_entry({"end_readout", "X@0", mini_end_layout(), mini_end_layout(), {0}, 11,
                    false, true, {1, -1}, false, 12, true}));
    add(make_entry({"ccu_11", "CC-X@2,1,0", wide3, wide3, {0, 2, 1}, 57, true, false, {2},
                    true, 13}));
    add(make_entry({"ccu_10", "CC10-X@2,1,0", wide3, wide3, {0, 2, 1}, 57, true, false, {2},
                    true, 13}));
    add(make_entry({"ccu_01", "CC01-X@2,1,0", wide3, wide3, {0, 2, 1}, 57, true, false, {2},
                    true, 13}));
    add(make_entry({"ccu_00", "CC00-X@2,1,0", wide3, wide3, {0, 2, 1}, 57, true, false, {2},
                    true, 13}));

    std::printf("wrote %zu entries to %s\n", lib.entries().size(), dir.c_str());
    return 0;
}
