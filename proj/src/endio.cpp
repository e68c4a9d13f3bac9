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

#include "gqca/endio.hpp"

#include <algorithm>

#include "gqca/errors.hpp"

namespace gqca {

namespace {

// Up-pair start positions of the encoded word, split by entry side. Qubit
// pairs (even starts) ride rightward from the left end; CU pairs (odd
// starts) ride leftward from the right end.
struct PairPlan {
    std::vector<size_t> left_targets;   // ascending even starts
    std::vector<size_t> right_targets;  // ascending odd starts
};

PairPlan plan_pairs(const Layout &layout, const LogicalWord &word) {
    PairPlan plan;
    for (size_t j = 0; j < layout.qubit_slots.size(); ++j) {
        size_t start = layout.qubit_slots[j] + (word.bits[j] ? 2 : 0);
        plan.left_targets.push_back(start);
    }
    if (word.cu_present) {
        plan.right_targets.push_back(*layout.cu_slot);
        plan.right_targets.push_back(*layout.cu_slot + 4);
    }
    std::sort(plan.left_targets.begin(), plan.left_targets.end());
    std::sort(plan.right_targets.begin(), plan.right_targets.end());
    return plan;
}

}  // namespace

PulseSequence load_bits(const Layout &layout, const LogicalWord &word) {
    layout.validate();
    if (word.bits.size() != layout.qubit_slots.size()) {
        throw InvalidConfig("load_bits: word does not match the layout");
    }
    if (word.cu_present && !layout.cu_slot) {
        throw InvalidConfig("load_bits: word requests a CU but the layout has no CU slot");
    }
    const size_t n = layout.n_cells;
    if (n % 2 != 0) {
        throw Error("load_bits: the end pumps need an even cell count (A left end, B right)");
    }
    PairPlan plan = plan_pairs(layout, word);
    if (plan.left_targets.empty() && plan.right_targets.empty()) {
        return {};
    }
    for (size_t s : plan.left_targets) {
        if (s < 2) {
            throw Error("array too short for word: Up pair at cell " + std::to_string(s) +
                        " leaves no room for the left pump");
        }
    }
    for (size_t s : plan.right_targets) {
        if (s + 3 > n) {
            throw Error("array too short for word: Up pair at cell " + std::to_string(s) +
                        " leaves no room for the right pump");
        }
    }

    // A pair departing the left pump sits at cells (1,2) at the end of its
    // departure phase and advances one cell per phase; symmetrically on the
    // right. Solving for the final phase count T (phases are indexed from 0,
    // even phases carry A0, odd phases B0):
    //   left pair:  start(T-1) = T - 2 - t_create  => t_create = T - s - 2
    //   right pair: start(T-1) = n - T + t_create  => t_create = T + s - n
    // Left creations land on even phases and right creations on odd ones;
    // both work out iff T is even.
    size_t T = 2;
    for (size_t s : plan.left_targets) {
        T = std::max(T, s + 2);
    }
    for (size_t s : plan.right_targets) {
        T = std::max(T, n - s + 1);
    }
    if (T % 2 != 0) {
        ++T;
    }

    std::vector<bool> left_create(T, false), left_depart(T, false);
    std::vector<bool> right_create(T, false), right_depart(T, false);
    for (size_t s : plan.left_targets) {
        size_t t = T - s - 2;
        left_create[t] = true;
        left_depart[t + 2] = true;
    }
    for (size_t s : plan.right_targets) {
        size_t t = T + s - n;
        right_create[t] = true;
        right_depart[t + 2] = true;
    }

    PulseSequence seq;
    for (size_t t = 0; t < T; ++t) {
        const bool a_phase = t % 2 == 0;
        if (a_phase) {
            if (left_create[t]) {
                seq.emplace_back(CellType::A, -1);
            }
            if (left_depart[t]) {
                seq.emplace_back(CellType::A, 1);
            }
            seq.emplace_back(CellType::A, 0);
        } else {
            if (right_create[t]) {
                seq.emplace_back(CellType::B, -1);
            }
            if (right_depart[t]) {
                seq.emplace_back(CellType::B, 1);
            }
            seq.emplace_back(CellType::B, 0);
        }
    }
    return seq;
}

int read_end(const CellConfig &config) {
    if (config.n_cells() == 0) {
        throw Error("read_end: empty array");
    }
    return config[0] == CellLevel::Up ? 1 : 0;
}

}  // namespace gqca
