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

#include "gqca/state.hpp"

#include <algorithm>
#include <cmath>

namespace gqca {

QuantumState::QuantumState(size_t n_cells, Mode mode) : indexer_(n_cells, mode) {
    if (n_cells > kMaxQuantumCells) {
        throw Error("quantum mode capped at " + std::to_string(kMaxQuantumCells) +
                    " cells, got " + std::to_string(n_cells));
    }
    if (indexer_.dim() > kMaxQuantumDim) {
        throw Error("quantum state dimension " + std::to_string(indexer_.dim()) +
                    " exceeds cap " + std::to_string(kMaxQuantumDim));
    }
    amps_.assign(indexer_.dim(), cdouble{0.0, 0.0});
}

QuantumState QuantumState::basis_state(const CellConfig &config, Mode mode) {
    validate_config(config, mode);
    QuantumState st(config.n_cells(), mode);
    st.amps_[st.indexer_.rank(config)] = 1.0;
    return st;
}

double QuantumState::norm_sq() const {
    double acc = 0.0;
    for (const cdouble &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

void QuantumState::renormalize() {
    double n = std::sqrt(norm_sq());
    if (n == 0.0) {
        throw Error("cannot renormalize the zero vector");
    }
    double inv = 1.0 / n;
    for (cdouble &a : amps_) {
        a *= inv;
    }
}

std::vector<std::pair<uint64_t, cdouble>> QuantumState::top_terms(size_t count) const {
    std::vector<std::pair<uint64_t, cdouble>> terms;
    for (uint64_t r = 0; r < amps_.size(); ++r) {
        if (std::norm(amps_[r]) > 1e-24) {
            terms.emplace_back(r, amps_[r]);
        }
    }
    std::stable_sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
        double na = std::norm(a.second), nb = std::norm(b.second);
        if (na != nb) {
            return na > nb;
        }
        return a.first < b.first;
    });
    if (terms.size() > count) {
        terms.resize(count);
    }
    return terms;
}

double QuantumState::distance_to(const QuantumState &o) const {
    if (o.dim() != dim()) {
        throw DimensionMismatch("distance_to: dimension mismatch");
    }
    double worst = 0.0;
    for (uint64_t r = 0; r < amps_.size(); ++r) {
        worst = std::max(worst, std::abs(amps_[r] - o.amps_[r]));
    }
    return worst;
}

}  // namespace gqca
