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

#include "gqca/engine.hpp"

#include <cmath>

#include "gqca/util.hpp"

namespace gqca {

namespace {

constexpr int kLevelContribution[3] = {-1, 1, 0};  // Down, Up, Fluor

/// Gate application over one target cell, restricted to the basis strides
/// whose neighbor digits satisfy the field condition. The index space is
/// walked as hihi | d_left | d_right | rest so the condition is evaluated
/// once per digit combination and the innermost loop stays contiguous.
template <unsigned D>
void apply_cell_kernel(std::vector<cdouble> &amps, const BasisIndexer &ix, size_t cell,
                       int field, const Gate1 &gate) {
    const uint64_t stride = ix.stride(cell);
    const uint64_t block = stride * D;
    const size_t n = ix.n_cells();

    const bool has_left = cell > 0;
    const bool has_right = cell + 1 < n;
    const unsigned radix_l = has_left ? ix.radix(cell - 1) : 1;
    const unsigned radix_r = has_right ? ix.radix(cell + 1) : 1;
    const uint64_t rstride = has_right ? ix.stride(cell + 1) : stride;

    const uint64_t n_hi = ix.dim() / block;
    const uint64_t n_hihi = n_hi / radix_l;

    cdouble m[D * D];
    for (unsigned r = 0; r < D; ++r) {
        for (unsigned c = 0; c < D; ++c) {
            m[r * D + c] = gate.at(r, c);
        }
    }

    auto body = [&](uint64_t hihi_begin, uint64_t hihi_end) {
        for (uint64_t hihi = hihi_begin; hihi < hihi_end; ++hihi) {
            for (unsigned dl = 0; dl < radix_l; ++dl) {
                const int f_left = has_left ? kLevelContribution[dl] : 0;
                const uint64_t hi_base = (hihi * radix_l + dl) * block;
                for (unsigned dr = 0; dr < radix_r; ++dr) {
                    const int f = f_left + (has_right ? kLevelContribution[dr] : 0);
                    if (f != field) {
                        continue;
                    }
                    const uint64_t lo_base = hi_base + dr * rstride;
                    for (uint64_t rest = 0; rest < rstride; ++rest) {
                        const uint64_t idx = lo_base + rest;
                        if constexpr (D == 2) {
                            const cdouble a0 = amps[idx];
                            const cdouble a1 = amps[idx + stride];
                            amps[idx] = m[0] * a0 + m[1] * a1;
                            amps[idx + stride] = m[2] * a0 + m[3] * a1;
                        } else {
                            const cdouble a0 = amps[idx];
                            const cdouble a1 = amps[idx + stride];
                            const cdouble a2 = amps[idx + 2 * stride];
                            amps[idx] = m[0] * a0 + m[1] * a1 + m[2] * a2;
                            amps[idx + stride] = m[3] * a0 + m[4] * a1 + m[5] * a2;
                            amps[idx + 2 * stride] = m[6] * a0 + m[7] * a1 + m[8] * a2;
                        }
                    }
                }
            }
        }
    };
    parallel_chunks(n_hihi, body);
}

unsigned rule_cell_radix(const UpdateRule &rule, Mode mode) {
    return (mode == Mode::ThreeLevel && rule.kind == CellType::B) ? 3u : 2u;
}

}  // namespace

std::vector<size_t> rule_target_cells(const UpdateRule &rule, size_t n_cells) {
    std::vector<size_t> cells;
    for (size_t i = rule.kind == CellType::A ? 0 : 1; i < n_cells; i += 2) {
        cells.push_back(i);
    }
    return cells;
}

void apply_rule(QuantumState &state, const UpdateRule &rule) {
    if (rule.is_slot()) {
        throw Error("cannot apply an unsubstituted U-slot rule");
    }
    rule.validate(state.mode());
    const BasisIndexer &ix = state.indexer();
    for (size_t cell : rule_target_cells(rule, ix.n_cells())) {
        const unsigned d = ix.radix(cell);
        Gate1 g = rule.gate.promoted_to(d);
        if (g.is_identity()) {
            continue;
        }
        if (d == 2) {
            apply_cell_kernel<2>(state.amplitudes(), ix, cell, rule.field, g);
        } else {
            apply_cell_kernel<3>(state.amplitudes(), ix, cell, rule.field, g);
        }
    }
}

void apply_sequence(QuantumState &state, const PulseSequence &seq) {
    for (size_t k = 0; k < seq.size(); ++k) {
        try {
            apply_rule(state, seq[k]);
        } catch (const Error &e) {
            throw Error("pulse " + std::to_string(k) + " (" + format_rule(seq[k]) +
                        "): " + e.what());
        }
    }
}

CellConfig classical_apply(const CellConfig &config, const UpdateRule &rule, Mode mode) {
    return classical_apply_phased({config, 1.0}, rule, mode).config;
}

CellConfig classical_apply_sequence(const CellConfig &config, const PulseSequence &seq,
                                    Mode mode) {
    CellConfig c = config;
    for (size_t k = 0; k < seq.size(); ++k) {
        try {
            c = classical_apply(c, seq[k], mode);
        } catch (const Error &e) {
            throw Error("pulse " + std::to_string(k) + " (" + format_rule(seq[k]) +
                        "): " + e.what());
        }
    }
    return c;
}

PhasedConfig classical_apply_phased(const PhasedConfig &in, const UpdateRule &rule, Mode mode) {
    if (rule.is_slot()) {
        throw Error("cannot apply an unsubstituted U-slot rule");
    }
    rule.validate(mode);
    validate_config(in.config, mode);
    const unsigned radix = rule_cell_radix(rule, mode);
    auto action = rule.gate.promoted_to(radix).permutation_action();
    if (!action) {
        throw NonClassicalGate("rule " + format_rule(rule) +
                               " creates superposition; classical path refused");
    }
    PhasedConfig out{in.config, in.phase};
    // Conditions read the pre-pulse configuration. Cells of the acting type
    // only neighbor cells of the other type, so this matches any sequential
    // application order.
    const size_t n = in.config.n_cells();
    for (size_t i = rule.kind == CellType::A ? 0 : 1; i < n; i += 2) {
        if (field_of(in.config, i) == rule.field) {
            unsigned old_level = static_cast<unsigned>(in.config[i]);
            out.config[i] = static_cast<CellLevel>(action->map[old_level]);
            out.phase *= action->phase[old_level];
        }
    }
    return out;
}

PhasedConfig classical_apply_sequence_phased(const PhasedConfig &in, const PulseSequence &seq,
                                             Mode mode) {
    PhasedConfig pc = in;
    for (const UpdateRule &rule : seq) {
        pc = classical_apply_phased(pc, rule, mode);
    }
    return pc;
}

bool sequence_is_classical(const PulseSequence &seq) {
    for (const UpdateRule &rule : seq) {
        if (rule.is_slot() || !rule.gate.permutation_action()) {
            return false;
        }
    }
    return true;
}

std::vector<cdouble> build_cell_factor(const UpdateRule &rule, size_t n_cells, size_t cell,
                                       Mode mode) {
    if (n_cells > 12) {
        throw Error("dense operator oracle capped at 12 cells");
    }
    rule.validate(mode);
    BasisIndexer ix(n_cells, mode);
    const uint64_t dim = ix.dim();
    Gate1 g = rule.gate.promoted_to(ix.radix(cell));
    std::vector<cdouble> M(dim * dim, cdouble{0.0, 0.0});
    for (uint64_t r = 0; r < dim; ++r) {
        CellConfig c = ix.unrank(r);
        if (cell_type(cell) == rule.kind && field_of(c, cell) == rule.field) {
            unsigned lv = static_cast<unsigned>(c[cell]);
            for (unsigned lp = 0; lp < g.dim(); ++lp) {
                CellConfig cp = c;
                cp[cell] = static_cast<CellLevel>(lp);
                M[ix.rank(cp) * dim + r] += g.at(lp, lv);
            }
        } else {
            M[r * dim + r] = 1.0;
        }
    }
    return M;
}

std::vector<cdouble> build_global_operator(const UpdateRule &rule, size_t n_cells, Mode mode) {
    if (n_cells > 12) {
        throw Error("dense operator oracle capped at 12 cells");
    }
    rule.validate(mode);
    BasisIndexer ix(n_cells, mode);
    const uint64_t dim = ix.dim();
    std::vector<cdouble> M(dim * dim, cdouble{0.0, 0.0});
    std::vector<cdouble> col(dim), next(dim);
    for (uint64_t r = 0; r < dim; ++r) {
        std::fill(col.begin(), col.end(), cdouble{0.0, 0.0});
        col[r] = 1.0;
        for (size_t cell : rule_target_cells(rule, n_cells)) {
            Gate1 g = rule.gate.promoted_to(ix.radix(cell));
            std::fill(next.begin(), next.end(), cdouble{0.0, 0.0});
            for (uint64_t s = 0; s < dim; ++s) {
                if (col[s] == cdouble{0.0, 0.0}) {
                    continue;
                }
                CellConfig c = ix.unrank(s);
                if (field_of(c, cell) == rule.field) {
                    unsigned lv = static_cast<unsigned>(c[cell]);
                    for (unsigned lp = 0; lp < g.dim(); ++lp) {
                        CellConfig cp = c;
                        cp[cell] = static_cast<CellLevel>(lp);
                        next[ix.rank(cp)] += g.at(lp, lv) * col[s];
                    }
                } else {
                    next[s] += col[s];
                }
            }
            col.swap(next);
        }
        for (uint64_t s = 0; s < dim; ++s) {
            M[s * dim + r] = col[s];
        }
    }
    return M;
}

size_t decay_channel(QuantumState &state, Rng &rng) {
    if (state.mode() != Mode::ThreeLevel) {
        throw Error("decay_channel requires 3-level mode");
    }
    const BasisIndexer &ix = state.indexer();
    auto &amps = state.amplitudes();
    size_t emissions = 0;
    for (size_t cell = 1; cell < ix.n_cells(); cell += 2) {
        const uint64_t stride = ix.stride(cell);
        const uint64_t block = stride * 3;
        const uint64_t n_hi = ix.dim() / block;

        double p = 0.0;
        for (uint64_t hi = 0; hi < n_hi; ++hi) {
            const uint64_t base = hi * block + 2 * stride;
            for (uint64_t rest = 0; rest < stride; ++rest) {
                p += std::norm(amps[base + rest]);
            }
        }
        const double u = rng.uniform();
        if (u < p) {
            // click: keep the Fluor component and let it decay to Down
            for (uint64_t hi = 0; hi < n_hi; ++hi) {
                const uint64_t base = hi * block;
                for (uint64_t rest = 0; rest < stride; ++rest) {
                    amps[base + rest] = amps[base + 2 * stride + rest];
                    amps[base + stride + rest] = 0.0;
                    amps[base + 2 * stride + rest] = 0.0;
                }
            }
            ++emissions;
        } else if (p > 0.0) {
            for (uint64_t hi = 0; hi < n_hi; ++hi) {
                const uint64_t base = hi * block + 2 * stride;
                for (uint64_t rest = 0; rest < stride; ++rest) {
                    amps[base + rest] = 0.0;
                }
            }
        } else {
            continue;  // no Fluor amplitude anywhere, nothing to project
        }
        state.renormalize();
    }
    return emissions;
}

}  // namespace gqca
