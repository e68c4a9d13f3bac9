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

#include <optional>
#include <string>
#include <vector>

#include "gqca/cell.hpp"

namespace gqca {

/// Width of one coded qubit (or classical bit) in cells.
constexpr size_t kQubitCells = 4;
/// Width of the control unit in cells.
constexpr size_t kCuCells = 6;
/// Minimum spacer run between blocks that still permits gate operations.
constexpr size_t kMinSpacer = 4;

/// Geometry of a coded array: where qubits and the control unit live.
///
/// Conventions fixed project-wide: qubit slots start on even (type-A) cells,
/// the CU slot starts on an odd (type-B) cell. With those parities one
/// transport pulse moves the CU and the qubits one cell in opposite
/// directions.
struct Layout {
    size_t n_cells = 0;
    std::vector<size_t> qubit_slots;  // each spans kQubitCells
    std::optional<size_t> cu_slot;    // spans kCuCells
    size_t spacer_min = kMinSpacer;

    size_t n_qubits() const { return qubit_slots.size(); }

    /// Throws InvalidConfig on overlap, out-of-range blocks, or spacing
    /// below spacer_min. Canonical layouts additionally pin the block
    /// parities (qubits even, CU odd); displaced frames may sit at either
    /// parity and are checked with `canonical = false`.
    void validate(bool canonical = true) const;

    /// Copy with qubit slots shifted by `displacement` and the CU slot by
    /// `-displacement` (the frame transport pulses produce).
    Layout displaced(long displacement) const;
};

/// Plain-text key/value layout file: n_cells, qubits, cu, spacer.
Layout load_layout_file(const std::string &path);
void save_layout_file(const std::string &path, const Layout &layout);
Layout parse_layout(const std::string &text);
std::string format_layout(const Layout &layout);

/// One classical value per qubit slot plus the CU flag.
struct LogicalWord {
    std::vector<int> bits;
    bool cu_present = false;

    bool operator==(const LogicalWord &o) const = default;
};

/// Word literal "q=101,cu=1"; "q=" empty for zero qubits.
std::string format_word(const LogicalWord &word);
LogicalWord parse_word(const std::string &literal);

/// Logical basis index of a word: qubit 0 is the most significant bit.
size_t word_index(const LogicalWord &word);
LogicalWord word_from_index(size_t index, size_t n_qubits, bool cu_present);

/// Qubit value 0 is coded Up,Up,Down,Down; value 1 is Down,Down,Up,Up. The
/// CU is the unique six-cell pattern Up,Up,Down,Down,Up,Up. Spacer cells are
/// Down.
CellConfig encode(const Layout &layout, const LogicalWord &word);

/// Exact inverse of encode; throws MalformedCode (with the first offending
/// cell) for configs outside the coded set.
LogicalWord decode(const Layout &layout, const CellConfig &config);

/// decode against the displaced frame; nullopt instead of throwing.
std::optional<LogicalWord> try_decode(const Layout &layout, const CellConfig &config,
                                      long displacement = 0);

/// Canonical synthesis geometries. Margins leave room for the pulse
/// sequences' transport segments.
Layout min_one_qubit_layout();    // qubit + CU, 18 cells
Layout min_two_qubit_layout();    // target, control, CU, 26 cells
Layout min_three_qubit_layout();  // target, two controls, CU, 34 cells
/// Four coded cells and nothing else; host of the end-rule readout entry.
Layout mini_end_layout();

}  // namespace gqca
