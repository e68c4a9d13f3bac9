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

#include <complex>
#include <vector>

#include "gqca/basis.hpp"
#include "gqca/cell.hpp"
#include "gqca/gate.hpp"

namespace gqca {

/// Memory cap for dense quantum states: at most 2^26 cells in 2-level mode;
/// in 3-level mode the total dimension is capped at the same value.
constexpr size_t kMaxQuantumCells = 26;
constexpr uint64_t kMaxQuantumDim = uint64_t{1} << 26;

/// Normalized amplitude vector over every configuration of a fixed-length
/// array. Exclusive-write value: operations mutate in place; never shared
/// across threads while being written.
class QuantumState {
  public:
    QuantumState(size_t n_cells, Mode mode);

    /// Basis state with amplitude 1 on `config`.
    static QuantumState basis_state(const CellConfig &config, Mode mode);

    size_t n_cells() const { return indexer_.n_cells(); }
    Mode mode() const { return indexer_.mode(); }
    uint64_t dim() const { return indexer_.dim(); }
    const BasisIndexer &indexer() const { return indexer_; }

    cdouble amplitude(uint64_t r) const { return amps_[r]; }
    cdouble amplitude(const CellConfig &config) const { return amps_[indexer_.rank(config)]; }
    void set_amplitude(uint64_t r, cdouble a) { amps_[r] = a; }

    std::vector<cdouble> &amplitudes() { return amps_; }
    const std::vector<cdouble> &amplitudes() const { return amps_; }

    double norm_sq() const;
    void renormalize();

    /// Largest-|amplitude| basis terms, ties broken by rank; used by traces.
    std::vector<std::pair<uint64_t, cdouble>> top_terms(size_t count) const;

    /// Max-norm distance to another state.
    double distance_to(const QuantumState &o) const;

  private:
    BasisIndexer indexer_;
    std::vector<cdouble> amps_;
};

}  // namespace gqca
