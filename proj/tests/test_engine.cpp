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

#include <cmath>

#include "gqca/engine.hpp"
#include "gqca/rng.hpp"
#include "gqca/transport.hpp"

using namespace gqca;

namespace {

QuantumState random_state(size_t n, Mode mode, uint64_t seed) {
    QuantumState psi(n, mode);
    Rng rng(seed);
    for (uint64_t r = 0; r < psi.dim(); ++r) {
        psi.set_amplitude(r, {rng.uniform() - 0.5, rng.uniform() - 0.5});
    }
    psi.renormalize();
    return psi;
}

std::vector<cdouble> apply_dense(const std::vector<cdouble> &m, const std::vector<cdouble> &v) {
    size_t dim = v.size();
    std::vector<cdouble> out(dim, cdouble{0, 0});
    for (size_t r = 0; r < dim; ++r) {
        for (size_t c = 0; c < dim; ++c) {
            out[r] += m[r * dim + c] * v[c];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("inverting every field-0 B cell slides a qubit block") {
    // coded block Up,Up,Down,Down starting at cell 4 in a Down background
    CellConfig c = parse_config("dddduudddddd");
    CellConfig after = classical_apply(c, UpdateRule(CellType::B, 0));
    CHECK(format_config(after) == "ddduuddddddd");
    // and the quantum engine agrees on the basis state
    QuantumState psi = QuantumState::basis_state(c, Mode::TwoLevel);
    apply_rule(psi, UpdateRule(CellType::B, 0));
    CHECK(std::abs(psi.amplitude(after) - cdouble{1.0, 0.0}) < 1e-12);
}

TEST_CASE("a rule whose field value no cell attains is the identity") {
    CellConfig c = CellConfig::all_down(8);
    CHECK(classical_apply(c, UpdateRule(CellType::A, 2)) == c);
    // Hadamard conditioned on field 0 misses when only end cells qualify
    QuantumState psi = QuantumState::basis_state(parse_config("duu"), Mode::TwoLevel);
    QuantumState before = psi;
    apply_rule(psi, UpdateRule(CellType::A, 0, gates::hadamard(), "H"));
    CHECK(psi.distance_to(before) < 1e-12);
}

TEST_CASE("empty sequence is the identity and inverses cancel") {
    QuantumState psi = random_state(8, Mode::TwoLevel, 11);
    QuantumState before = psi;
    apply_sequence(psi, {});
    CHECK(psi.distance_to(before) < 1e-15);

    PulseSequence seq = {
        UpdateRule(CellType::B, 0),
        UpdateRule(CellType::A, 0, gates::hadamard(), "H"),
        UpdateRule(CellType::B, 2, gates::phase(0.7), ""),
        UpdateRule(CellType::A, -2),
        UpdateRule(CellType::B, -1, gates::hadamard(), "H"),
    };
    apply_sequence(psi, seq);
    apply_sequence(psi, inverse_sequence(seq));
    CHECK(psi.distance_to(before) < 1e-10);
}

TEST_CASE("alternating field-0 pulses move CU and qubits in opposite directions") {
    // a 22-cell array holding one qubit (slot 4) and the CU (slot 13)
    CellConfig c = parse_config("dddduuddddddduudduuddd");
    CellConfig two = classical_apply_sequence(c, {UpdateRule(CellType::B, 0),
                                                  UpdateRule(CellType::A, 0)});
    // qubit block moved two cells left, CU two cells right
    CHECK(format_config(two) == "dduuddddddddddduudduud");
}

TEST_CASE("classical path equals the quantum path on basis states") {
    std::vector<UpdateRule> rules = {
        UpdateRule(CellType::A, 0),  UpdateRule(CellType::B, 0),  UpdateRule(CellType::A, 2),
        UpdateRule(CellType::B, -2), UpdateRule(CellType::A, -1), UpdateRule(CellType::B, 1),
        UpdateRule(CellType::B, 0, gates::phase(1.1), ""),
    };
    for (size_t n = 2; n <= 12; n += 2) {
        BasisIndexer ix(n, Mode::TwoLevel);
        for (const UpdateRule &rule : rules) {
            for (uint64_t r = 0; r < ix.dim(); ++r) {
                CellConfig c = ix.unrank(r);
                CellConfig classical = classical_apply(c, rule);
                QuantumState psi = QuantumState::basis_state(c, Mode::TwoLevel);
                apply_rule(psi, rule);
                // global phase ignored
                REQUIRE(std::abs(std::abs(psi.amplitude(classical)) - 1.0) < 1e-12);
            }
        }
    }
}

TEST_CASE("superposition-creating gates are refused classically") {
    CHECK_THROWS_AS(
        classical_apply(parse_config("dud"), UpdateRule(CellType::A, 0, gates::hadamard(), "H")),
        NonClassicalGate);
}

TEST_CASE("phase tracking matches the dense engine") {
    PulseSequence seq = {
        UpdateRule(CellType::B, 0),
        UpdateRule(CellType::A, 0, gates::phase(0.3), ""),
        UpdateRule(CellType::B, 2, gates::pauli_z(), "Z"),
        UpdateRule(CellType::A, 0),
    };
    BasisIndexer ix(8, Mode::TwoLevel);
    for (uint64_t r = 0; r < ix.dim(); r += 7) {
        CellConfig c = ix.unrank(r);
        PhasedConfig pc = classical_apply_sequence_phased({c, 1.0}, seq);
        QuantumState psi = QuantumState::basis_state(c, Mode::TwoLevel);
        apply_sequence(psi, seq);
        REQUIRE(std::abs(psi.amplitude(pc.config) - pc.phase) < 1e-12);
    }
}

TEST_CASE("dense operator oracle: examples and unitarity") {
    // no interior A cell can have field 2 on a 2-cell array
    auto id2 = build_global_operator(UpdateRule(CellType::A, 2), 2);
    for (size_t r = 0; r < 4; ++r) {
        for (size_t c = 0; c < 4; ++c) {
            CHECK(std::abs(id2[r * 4 + c] - (r == c ? 1.0 : 0.0)) < 1e-12);
        }
    }
    // inversion rules build permutation matrices
    auto perm = build_global_operator(UpdateRule(CellType::B, 0), 3);
    for (size_t c = 0; c < 8; ++c) {
        size_t nonzero = 0;
        for (size_t r = 0; r < 8; ++r) {
            double m = std::abs(perm[r * 8 + c]);
            CHECK((m < 1e-12 || std::abs(m - 1.0) < 1e-12));
            nonzero += m > 0.5;
        }
        CHECK(nonzero == 1);
    }
    // operator-level unitarity
    for (const UpdateRule &rule :
         {UpdateRule(CellType::A, 0, gates::hadamard(), "H"), UpdateRule(CellType::B, -2),
          UpdateRule(CellType::B, 1, gates::phase(0.9), "")}) {
        auto op = build_global_operator(rule, 6);
        size_t dim = 64;
        for (size_t r = 0; r < dim; ++r) {
            for (size_t c = 0; c < dim; ++c) {
                cdouble acc = 0;
                for (size_t k = 0; k < dim; ++k) {
                    acc += std::conj(op[k * dim + r]) * op[k * dim + c];
                }
                if (r == c) {
                    acc -= 1.0;
                }
                REQUIRE(std::abs(acc) < 1e-10);
            }
        }
    }
    CHECK_THROWS_AS(build_global_operator(UpdateRule(CellType::A, 0), 13), Error);
}

TEST_CASE("apply_rule equals the dense oracle on random states") {
    for (size_t n : {4, 6, 8}) {
        for (const UpdateRule &rule :
             {UpdateRule(CellType::A, 0, gates::hadamard(), "H"), UpdateRule(CellType::B, 0),
              UpdateRule(CellType::B, 2, gates::phase(0.5), "")}) {
            QuantumState psi = random_state(n, Mode::TwoLevel, 3 * n);
            auto expect = apply_dense(build_global_operator(rule, n), psi.amplitudes());
            apply_rule(psi, rule);
            for (uint64_t r = 0; r < psi.dim(); ++r) {
                REQUIRE(std::abs(psi.amplitude(r) - expect[r]) < 1e-10);
            }
        }
    }
}

TEST_CASE("per-cell factors commute: any application order matches the oracle") {
    for (size_t n : {5, 6, 7, 8}) {
        UpdateRule rule(CellType::A, 0, gates::hadamard(), "H");
        auto cells = rule_target_cells(rule, n);
        std::vector<size_t> order(cells);
        auto global = build_global_operator(rule, n);
        size_t dim = size_t{1} << n;
        std::vector<std::vector<cdouble>> factors;
        for (size_t cell : cells) {
            factors.push_back(build_cell_factor(rule, n, cell));
        }
        std::vector<size_t> idx(cells.size());
        for (size_t i = 0; i < idx.size(); ++i) {
            idx[i] = i;
        }
        do {
            // product in this order applied to each basis vector
            for (uint64_t col = 0; col < dim; col += 5) {
                std::vector<cdouble> v(dim, cdouble{0, 0});
                v[col] = 1.0;
                for (size_t i : idx) {
                    v = apply_dense(factors[i], v);
                }
                for (uint64_t r = 0; r < dim; ++r) {
                    REQUIRE(std::abs(v[r] - global[r * dim + col]) < 1e-10);
                }
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
}

TEST_CASE("norm is preserved per pulse and over long sequences") {
    QuantumState psi = random_state(8, Mode::TwoLevel, 77);
    Rng rng(123);
    PulseSequence pool = {
        UpdateRule(CellType::A, 0, gates::hadamard(), "H"), UpdateRule(CellType::B, 0),
        UpdateRule(CellType::A, 2), UpdateRule(CellType::B, -2),
        UpdateRule(CellType::B, 2, gates::phase(0.25), "")};
    for (int i = 0; i < 1000; ++i) {
        apply_rule(psi, pool[rng.next_u64() % pool.size()]);
        if (i < 10) {
            REQUIRE(std::abs(psi.norm_sq() - 1.0) < 1e-12);
        }
    }
    CHECK(std::abs(psi.norm_sq() - 1.0) < 1e-9);
}

TEST_CASE("transport moves isolated blocks one cell per pulse, form preserved") {
    const size_t n = 10000;
    // block with an even start travels left under B0-first alternation
    CellConfig c = CellConfig::all_down(n);
    c[5000] = CellLevel::Up;
    c[5001] = CellLevel::Up;
    PulseSequence seq = transport(40);
    CellConfig cur = c;
    size_t start = 5000;
    for (const UpdateRule &rule : seq) {
        cur = classical_apply(cur, rule);
        --start;
        for (size_t i = 4900; i < 5100; ++i) {
            REQUIRE((cur[i] == CellLevel::Up) == (i == start || i == start + 1));
        }
    }
    // odd start travels right under the same pulses
    CellConfig odd = CellConfig::all_down(n);
    odd[5001] = CellLevel::Up;
    odd[5002] = CellLevel::Up;
    CellConfig cur2 = classical_apply_sequence(odd, transport(40));
    CHECK(cur2[5041] == CellLevel::Up);
    CHECK(cur2[5042] == CellLevel::Up);
}

TEST_CASE("decay channel") {
    // one cell pinned in the third level decays with certainty
    QuantumState psi = QuantumState::basis_state(parse_config("df"), Mode::ThreeLevel);
    auto [after, emissions] = decay_channel(std::move(psi), 42);
    CHECK(emissions == 1);
    CHECK(std::abs(after.amplitude(parse_config("dd")) - cdouble{1.0, 0.0}) < 1e-12);

    // no third-level amplitude anywhere: nothing happens
    QuantumState flat = random_state(4, Mode::TwoLevel, 5);
    QuantumState three(4, Mode::ThreeLevel);
    BasisIndexer ix2(4, Mode::TwoLevel);
    for (uint64_t r = 0; r < flat.dim(); ++r) {
        three.set_amplitude(three.indexer().rank(ix2.unrank(r)), flat.amplitude(r));
    }
    QuantumState before = three;
    Rng rng(9);
    CHECK(decay_channel(three, rng) == 0);
    CHECK(three.distance_to(before) < 1e-15);

    CHECK_THROWS_AS(decay_channel(flat, rng), Error);

    // Born statistics on an equal superposition of Fluor and Up
    size_t clicks = 0;
    const size_t trials = 10000;
    for (size_t t = 0; t < trials; ++t) {
        QuantumState s(2, Mode::ThreeLevel);
        s.set_amplitude(s.indexer().rank(parse_config("df")), 1.0 / std::sqrt(2.0));
        s.set_amplitude(s.indexer().rank(parse_config("du")), 1.0 / std::sqrt(2.0));
        Rng r(1000 + t);
        clicks += decay_channel(s, r);
    }
    double freq = static_cast<double>(clicks) / trials;
    CHECK(freq == doctest::Approx(0.5).epsilon(0.04));
    CHECK(std::abs(freq - 0.5) < 0.02);
}

TEST_CASE("sequence errors carry the pulse index") {
    QuantumState psi = QuantumState::basis_state(parse_config("dudu"), Mode::TwoLevel);
    PulseSequence seq = {UpdateRule(CellType::B, 0),
                         UpdateRule(CellType::B, 0, gates::readout_swap(), "FL")};
    try {
        apply_sequence(psi, seq);
        FAIL("expected a dimension error");
    } catch (const Error &e) {
        CHECK(std::string(e.what()).find("pulse 1") != std::string::npos);
    }
}
