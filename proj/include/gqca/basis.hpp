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

#include <cstdint>
#include <vector>

#include "gqca/cell.hpp"

namespace gqca {

/// Mixed-radix indexing of basis configurations. Cell 0 is the most
/// significant digit; level order is Down < Up < Fluor. In 2-level mode every
/// cell has radix 2; in 3-level mode B cells have radix 3.
class BasisIndexer {
  public:
    BasisIndexer(size_t n_cells, Mode mode);

    size_t n_cells() const { return n_cells_; }
    Mode mode() const { return mode_; }
    uint64_t dim() const { return dim_; }

    uint64_t stride(size_t cell) const { return strides_[cell]; }
    unsigned radix(size_t cell) const { return radices_[cell]; }

    /// Digit of `cell` within basis index `r`.
    unsigned digit(uint64_t r, size_t cell) const {
        return static_cast<unsigned>((r / strides_[cell]) % radices_[cell]);
    }

    uint64_t rank(const CellConfig &config) const;
    CellConfig unrank(uint64_t r) const;

  private:
    size_t n_cells_;
    Mode mode_;
    uint64_t dim_;
    std::vector<uint64_t> strides_;
    std::vector<unsigned> radices_;
};

/// Convenience wrappers matching the indexing contract above.
uint64_t rank_config(const CellConfig &config, Mode mode);
CellConfig unrank_config(size_t n_cells, Mode mode, uint64_t r);

}  // namespace gqca
