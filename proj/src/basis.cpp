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

#include "gqca/basis.hpp"

namespace gqca {

BasisIndexer::BasisIndexer(size_t n_cells, Mode mode) : n_cells_(n_cells), mode_(mode) {
    if (n_cells < 2) {
        throw InvalidConfig("basis: need at least 2 cells");
    }
    radices_.resize(n_cells);
    strides_.resize(n_cells);
    for (size_t i = 0; i < n_cells; ++i) {
        radices_[i] = cell_radix(i, mode);
    }
    uint64_t s = 1;
    for (size_t i = n_cells; i-- > 0;) {
        strides_[i] = s;
        uint64_t next = s * radices_[i];
        if (next / radices_[i] != s) {
            throw Error("basis: dimension overflow at " + std::to_string(n_cells) + " cells");
        }
        s = next;
    }
    dim_ = s;
}

uint64_t BasisIndexer::rank(const CellConfig &config) const {
    if (config.n_cells() != n_cells_) {
        throw DimensionMismatch("rank: config has " + std::to_string(config.n_cells()) +
                                " cells, indexer " + std::to_string(n_cells_));
    }
    validate_config(config, mode_);
    uint64_t r = 0;
    for (size_t i = 0; i < n_cells_; ++i) {
        r += static_cast<uint64_t>(config[i]) * strides_[i];
    }
    return r;
}

CellConfig BasisIndexer::unrank(uint64_t r) const {
    if (r >= dim_) {
        throw Error("unrank: rank " + std::to_string(r) + " out of range (dim " +
                    std::to_string(dim_) + ")");
    }
    CellConfig c;
    c.levels.resize(n_cells_);
    for (size_t i = 0; i < n_cells_; ++i) {
        c.levels[i] = static_cast<CellLevel>(digit(r, i));
    }
    return c;
}

uint64_t rank_config(const CellConfig &config, Mode mode) {
    return BasisIndexer(config.n_cells(), mode).rank(config);
}

CellConfig unrank_config(size_t n_cells, Mode mode, uint64_t r) {
    return BasisIndexer(n_cells, mode).unrank(r);
}

}  // namespace gqca
