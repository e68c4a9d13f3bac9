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

#include "gqca/layout.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gqca/errors.hpp"

namespace gqca {

namespace {

const CellLevel kQubitZero[kQubitCells] = {CellLevel::Up, CellLevel::Up, CellLevel::Down,
                                           CellLevel::Down};
const CellLevel kQubitOne[kQubitCells] = {CellLevel::Down, CellLevel::Down, CellLevel::Up,
                                          CellLevel::Up};
const CellLevel kCuPattern[kCuCells] = {CellLevel::Up,   CellLevel::Up, CellLevel::Down,
                                        CellLevel::Down, CellLevel::Up, CellLevel::Up};

struct Block {
    size_t start;
    size_t span;
    int qubit;  // -1 for the CU
};

std::vector<Block> ordered_blocks(const Layout &layout) {
    std::vector<Block> blocks;
    for (size_t j = 0; j < layout.qubit_slots.size(); ++j) {
        blocks.push_back({layout.qubit_slots[j], kQubitCells, static_cast<int>(j)});
    }
    if (layout.cu_slot) {
        blocks.push_back({*layout.cu_slot, kCuCells, -1});
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const Block &a, const Block &b) { return a.start < b.start; });
    return blocks;
}

}  // namespace

void Layout::validate(bool canonical) const {
    if (n_cells < 2) {
        throw InvalidConfig("layout: need at least 2 cells");
    }
    auto blocks = ordered_blocks(*this);
    size_t prev_end = 0;
    bool first = true;
    for (const Block &b : blocks) {
        if (canonical && b.qubit >= 0 && b.start % 2 != 0) {
            throw InvalidConfig("layout: qubit slot " + std::to_string(b.start) +
                                " must start on an even (type-A) cell");
        }
        if (canonical && b.qubit < 0 && b.start % 2 != 1) {
            throw InvalidConfig("layout: CU slot " + std::to_string(b.start) +
                                " must start on an odd (type-B) cell");
        }
        if (b.start + b.span > n_cells) {
            throw InvalidConfig("layout: block at " + std::to_string(b.start) +
                                " exceeds the array");
        }
        if (!first && b.start < prev_end + (canonical ? spacer_min : 0)) {
            throw InvalidConfig("layout: blocks at " + std::to_string(prev_end) + ".." +
                                std::to_string(b.start) + (canonical ? " closer than spacer_min "
                                + std::to_string(spacer_min) : std::string(" overlap")));
        }
        prev_end = b.start + b.span;
        first = false;
    }
}

Layout Layout::displaced(long displacement) const {
    Layout out = *this;
    for (size_t &s : out.qubit_slots) {
        long v = static_cast<long>(s) + displacement;
        if (v < 0 || static_cast<size_t>(v) + kQubitCells > n_cells) {
            throw InvalidConfig("displaced layout: qubit slot out of range");
        }
        s = static_cast<size_t>(v);
    }
    if (out.cu_slot) {
        long v = static_cast<long>(*out.cu_slot) - displacement;
        if (v < 0 || static_cast<size_t>(v) + kCuCells > n_cells) {
            throw InvalidConfig("displaced layout: CU slot out of range");
        }
        out.cu_slot = static_cast<size_t>(v);
    }
    return out;
}

std::string format_layout(const Layout &layout) {
    std::ostringstream os;
    os << "n_cells " << layout.n_cells << "\n";
    os << "qubits";
    for (size_t s : layout.qubit_slots) {
        os << " " << s;
    }
    os << "\n";
    os << "cu " << (layout.cu_slot ? std::to_string(*layout.cu_slot) : "none") << "\n";
    os << "spacer " << layout.spacer_min << "\n";
    return os.str();
}

Layout parse_layout(const std::string &text) {
    Layout layout;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) {
            continue;
        }
        if (key == "n_cells") {
            ls >> layout.n_cells;
        } else if (key == "qubits") {
            size_t s;
            while (ls >> s) {
                layout.qubit_slots.push_back(s);
            }
        } else if (key == "cu") {
            std::string v;
            ls >> v;
            if (v != "none") {
                layout.cu_slot = std::stoul(v);
            }
        } else if (key == "spacer") {
            ls >> layout.spacer_min;
        } else {
            throw ParseError("layout: unknown key '" + key + "'");
        }
    }
    layout.validate();
    return layout;
}

Layout load_layout_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open layout file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_layout(buf.str());
}

void save_layout_file(const std::string &path, const Layout &layout) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write layout file '" + path + "'");
    }
    out << format_layout(layout);
}

std::string format_word(const LogicalWord &word) {
    std::string s = "q=";
    for (int b : word.bits) {
        s += b ? '1' : '0';
    }
    s += ",cu=";
    s += word.cu_present ? '1' : '0';
    return s;
}

LogicalWord parse_word(const std::string &literal) {
    LogicalWord word;
    std::stringstream ss(literal);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.rfind("q=", 0) == 0) {
            for (char c : part.substr(2)) {
                if (c != '0' && c != '1') {
                    throw ParseError("word literal: bad bit '" + std::string(1, c) + "'");
                }
                word.bits.push_back(c - '0');
            }
        } else if (part.rfind("cu=", 0) == 0) {
            word.cu_present = part.substr(3) == "1";
        } else {
            throw ParseError("word literal: unknown part '" + part + "'");
        }
    }
    return word;
}

size_t word_index(const LogicalWord &word) {
    size_t idx = 0;
    for (int b : word.bits) {
        idx = idx * 2 + static_cast<size_t>(b);
    }
    return idx;
}

LogicalWord word_from_index(size_t index, size_t n_qubits, bool cu_present) {
    LogicalWord word;
    word.cu_present = cu_present;
    word.bits.assign(n_qubits, 0);
    for (size_t j = n_qubits; j-- > 0;) {
        word.bits[j] = static_cast<int>(index & 1);
        index >>= 1;
    }
    return word;
}

CellConfig encode(const Layout &layout, const LogicalWord &word) {
    layout.validate(false);
    if (word.bits.size() != layout.qubit_slots.size()) {
        throw InvalidConfig("encode: word has " + std::to_string(word.bits.size()) +
                            " bits, layout " + std::to_string(layout.qubit_slots.size()) +
                            " qubit slots");
    }
    if (word.cu_present && !layout.cu_slot) {
        throw InvalidConfig("encode: word requests a CU but the layout has no CU slot");
    }
    CellConfig config = CellConfig::all_down(layout.n_cells);
    for (size_t j = 0; j < layout.qubit_slots.size(); ++j) {
        const CellLevel *pattern = word.bits[j] ? kQubitOne : kQubitZero;
        for (size_t k = 0; k < kQubitCells; ++k) {
            config[layout.qubit_slots[j] + k] = pattern[k];
        }
    }
    if (word.cu_present) {
        for (size_t k = 0; k < kCuCells; ++k) {
            config[*layout.cu_slot + k] = kCuPattern[k];
        }
    }
    return config;
}

namespace {

LogicalWord decode_impl(const Layout &layout, const CellConfig &config, bool *ok,
                        size_t *bad_cell) {
    LogicalWord word;
    word.bits.assign(layout.qubit_slots.size(), 0);
    word.cu_present = layout.cu_slot.has_value();
    auto fail = [&](size_t cell) {
        *ok = false;
        *bad_cell = cell;
        return LogicalWord{};
    };
    *ok = true;
    if (config.n_cells() != layout.n_cells) {
        return fail(0);
    }
    auto blocks = ordered_blocks(layout);
    size_t cursor = 0;
    for (const Block &b : blocks) {
        for (; cursor < b.start; ++cursor) {
            if (config[cursor] != CellLevel::Down) {
                return fail(cursor);
            }
        }
        if (b.qubit >= 0) {
            const CellLevel *pattern =
                (config[b.start] == kQubitZero[0]) ? kQubitZero : kQubitOne;
            for (size_t k = 0; k < kQubitCells; ++k) {
                if (config[b.start + k] != pattern[k]) {
                    return fail(b.start + k);
                }
            }
            word.bits[static_cast<size_t>(b.qubit)] = (pattern == kQubitOne) ? 1 : 0;
        } else {
            for (size_t k = 0; k < kCuCells; ++k) {
                if (config[b.start + k] != kCuPattern[k]) {
                    return fail(b.start + k);
                }
            }
        }
        cursor = b.start + b.span;
    }
    for (; cursor < layout.n_cells; ++cursor) {
        if (config[cursor] != CellLevel::Down) {
            return fail(cursor);
        }
    }
    return word;
}

}  // namespace

LogicalWord decode(const Layout &layout, const CellConfig &config) {
    bool ok;
    size_t bad_cell;
    LogicalWord word = decode_impl(layout, config, &ok, &bad_cell);
    if (!ok) {
        throw MalformedCode(bad_cell, "config is not a coded state for this layout");
    }
    return word;
}

std::optional<LogicalWord> try_decode(const Layout &layout, const CellConfig &config,
                                      long displacement) {
    Layout frame = layout;
    try {
        if (displacement != 0) {
            frame = layout.displaced(displacement);
        }
        frame.validate(false);
    } catch (const InvalidConfig &) {
        return std::nullopt;
    }
    bool ok;
    size_t bad_cell;
    LogicalWord word = decode_impl(frame, config, &ok, &bad_cell);
    if (!ok) {
        return std::nullopt;
    }
    return word;
}

Layout min_one_qubit_layout() {
    Layout layout;
    layout.n_cells = 18;
    layout.qubit_slots = {2};
    layout.cu_slot = 11;
    return layout;
}

Layout min_two_qubit_layout() {
    Layout layout;
    layout.n_cells = 26;
    layout.qubit_slots = {2, 10};
    layout.cu_slot = 19;
    return layout;
}

Layout min_three_qubit_layout() {
    Layout layout;
    layout.n_cells = 34;
    layout.qubit_slots = {2, 10, 18};
    layout.cu_slot = 27;
    return layout;
}

Layout mini_end_layout() {
    Layout layout;
    layout.n_cells = 4;
    layout.qubit_slots = {0};
    return layout;
}

}  // namespace gqca
