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
#include <string>
#include <vector>

#include "gqca/errors.hpp"

namespace gqca {

/// Internal level of one cell. `Fluor` is the fast-decaying third level and
/// is legal only on type-B cells in 3-level mode.
enum class CellLevel : uint8_t { Down = 0, Up = 1, Fluor = 2 };

enum class CellType : uint8_t { A = 0, B = 1 };

enum class Mode : uint8_t { TwoLevel = 2, ThreeLevel = 3 };

/// Cells alternate A, B along the array; index 0 (the left end) is type A.
constexpr CellType cell_type(size_t index) {
    return (index % 2 == 0) ? CellType::A : CellType::B;
}

/// Number of levels cell `index` can occupy in `mode`. Type-A cells are
/// two-level in every mode.
constexpr unsigned cell_radix(size_t index, Mode mode) {
    return (mode == Mode::ThreeLevel && cell_type(index) == CellType::B) ? 3u : 2u;
}

/// Classical assignment of every cell to a basis level; the computational
/// basis label of the array.
struct CellConfig {
    std::vector<CellLevel> levels;

    CellConfig() = default;
    explicit CellConfig(std::vector<CellLevel> lv) : levels(std::move(lv)) {}
    /// All-Down array of `n` cells.
    static CellConfig all_down(size_t n) {
        return CellConfig(std::vector<CellLevel>(n, CellLevel::Down));
    }

    size_t n_cells() const { return levels.size(); }
    CellLevel &operator[](size_t i) { return levels[i]; }
    CellLevel operator[](size_t i) const { return levels[i]; }
    bool operator==(const CellConfig &o) const = default;
};

/// Throws InvalidConfig unless `config` is legal in `mode` (≥ 2 cells, and
/// Fluor only on B cells in 3-level mode).
void validate_config(const CellConfig &config, Mode mode);

/// Contribution of one neighbor to a field value: Up +1, Down −1, Fluor 0.
constexpr int field_contribution(CellLevel level) {
    switch (level) {
        case CellLevel::Up: return 1;
        case CellLevel::Down: return -1;
        case CellLevel::Fluor: return 0;
    }
    return 0;
}

/// Net state of the neighbors of cell `i`: number of Up neighbors minus the
/// number of Down neighbors. End cells have a single neighbor.
int field_of(const CellConfig &config, size_t i);

/// Textual config literal over {d,u,f}, index 0 leftmost ("dduu").
std::string format_config(const CellConfig &config);
CellConfig parse_config(const std::string &literal);

}  // namespace gqca
