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

#include "gqca/cell.hpp"

namespace gqca {

void validate_config(const CellConfig &config, Mode mode) {
    if (config.n_cells() < 2) {
        throw InvalidConfig("array needs at least 2 cells, got " +
                            std::to_string(config.n_cells()));
    }
    for (size_t i = 0; i < config.n_cells(); ++i) {
        if (config[i] == CellLevel::Fluor) {
            if (mode == Mode::TwoLevel) {
                throw InvalidConfig("Fluor level in 2-level mode at cell " + std::to_string(i));
            }
            if (cell_type(i) == CellType::A) {
                throw InvalidConfig("Fluor level on a type-A cell at index " + std::to_string(i));
            }
        }
    }
}

int field_of(const CellConfig &config, size_t i) {
    if (i >= config.n_cells()) {
        throw Error("field_of: cell index " + std::to_string(i) + " out of bounds");
    }
    int f = 0;
    if (i > 0) {
        f += field_contribution(config[i - 1]);
    }
    if (i + 1 < config.n_cells()) {
        f += field_contribution(config[i + 1]);
    }
    return f;
}

std::string format_config(const CellConfig &config) {
    std::string s;
    s.reserve(config.n_cells());
    for (CellLevel lv : config.levels) {
        switch (lv) {
            case CellLevel::Down: s += 'd'; break;
            case CellLevel::Up: s += 'u'; break;
            case CellLevel::Fluor: s += 'f'; break;
        }
    }
    return s;
}

CellConfig parse_config(const std::string &literal) {
    CellConfig c;
    c.levels.reserve(literal.size());
    for (char ch : literal) {
        switch (ch) {
            case 'd': c.levels.push_back(CellLevel::Down); break;
            case 'u': c.levels.push_back(CellLevel::Up); break;
            case 'f': c.levels.push_back(CellLevel::Fluor); break;
            default:
                throw ParseError(std::string("config literal: unexpected character '") + ch + "'");
        }
    }
    return c;
}

}  // namespace gqca
