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

#include "gqca/rule.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gqca {

namespace {

constexpr double kPi = 3.14159265358979323846;

Gate1 named_gate(const std::string &name) {
    if (name == "INV" || name == "X") {
        return gates::inversion();
    }
    if (name == "ID") {
        return gates::identity2();
    }
    if (name == "H") {
        return gates::hadamard();
    }
    if (name == "Z") {
        return gates::pauli_z();
    }
    if (name == "T") {
        return gates::phase(kPi / 4.0);
    }
    if (name == "FL") {
        return gates::readout_swap();
    }
    if (name == "U") {
        return gates::identity2();  // placeholder until substitution
    }
    throw ParseError("unknown gate name '" + name + "'");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

UpdateRule UpdateRule::inverted() const {
    UpdateRule r = *this;
    r.gate = gate.adjoint();
    if (label != "U" && !r.gate.approx_equal(gate, 1e-15)) {
        r.label = "";  // adjoint generally has no named literal
    }
    return r;
}

void UpdateRule::validate(Mode mode) const {
    if (field < -2 || field > 2) {
        throw Error("rule field " + std::to_string(field) + " outside {-2..2}");
    }
    if (!gate.is_unitary()) {
        throw Error("rule gate is not unitary (defect " +
                    std::to_string(gate.unitarity_defect()) + ")");
    }
    if (gate.dim() == 3) {
        if (mode != Mode::ThreeLevel) {
            throw DimensionMismatch("3x3 gate in 2-level mode");
        }
        if (kind != CellType::B) {
            throw DimensionMismatch("3x3 gate on a type-A rule");
        }
    }
}

PulseSequence inverse_sequence(const PulseSequence &seq) {
    PulseSequence out;
    out.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        out.push_back(it->inverted());
    }
    return out;
}

PulseSequence parity_swapped(const PulseSequence &seq) {
    PulseSequence out = seq;
    for (UpdateRule &rule : out) {
        rule.kind = rule.kind == CellType::A ? CellType::B : CellType::A;
    }
    return out;
}

std::string format_complex(cdouble z) {
    if (z.imag() == 0.0) {
        return format_double(z.real());
    }
    std::string s = format_double(z.real());
    if (z.imag() >= 0.0) {
        s += "+";
    }
    s += format_double(z.imag()) + "i";
    return s;
}

cdouble parse_complex(const std::string &text) {
    if (text.empty()) {
        throw ParseError("empty complex literal");
    }
    if (text.back() == 'i') {
        std::string body = text.substr(0, text.size() - 1);
        // split at the sign of the imaginary part (not the leading sign, not
        // an exponent sign)
        for (size_t p = body.size(); p-- > 1;) {
            char c = body[p];
            if ((c == '+' || c == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
                return {std::stod(body.substr(0, p)), std::stod(body.substr(p))};
            }
        }
        return {0.0, std::stod(body)};  // pure imaginary, e.g. "1i"
    }
    return {std::stod(text), 0.0};
}

std::string format_rule(const UpdateRule &rule) {
    std::string s(1, rule.kind == CellType::A ? 'A' : 'B');
    s += std::to_string(rule.field);
    if (rule.label == "INV") {
        return s;
    }
    if (!rule.label.empty()) {
        return s + ":" + rule.label;
    }
    // explicit matrix
    s += ":U[";
    for (unsigned r = 0; r < rule.gate.dim(); ++r) {
        if (r) {
            s += ";";
        }
        for (unsigned c = 0; c < rule.gate.dim(); ++c) {
            if (c) {
                s += ",";
            }
            s += format_complex(rule.gate.at(r, c));
        }
    }
    s += "]";
    return s;
}

UpdateRule parse_rule(const std::string &literal) {
    if (literal.size() < 2 || (literal[0] != 'A' && literal[0] != 'B')) {
        throw ParseError("rule literal must start with A or B: '" + literal + "'");
    }
    UpdateRule rule;
    rule.kind = literal[0] == 'A' ? CellType::A : CellType::B;
    size_t colon = literal.find(':');
    std::string field_part = literal.substr(1, colon == std::string::npos ? colon : colon - 1);
    try {
        size_t used = 0;
        rule.field = std::stoi(field_part, &used);
        if (used != field_part.size()) {
            throw std::invalid_argument(field_part);
        }
    } catch (const std::exception &) {
        throw ParseError("bad field in rule literal '" + literal + "'");
    }
    if (rule.field < -2 || rule.field > 2) {
        throw ParseError("field outside {-2..2} in '" + literal + "'");
    }
    if (colon == std::string::npos) {
        return rule;  // default INV
    }
    std::string gate_part = literal.substr(colon + 1);
    if (gate_part.empty()) {
        throw ParseError("empty gate in rule literal '" + literal + "'");
    }
    if (gate_part.rfind("U[", 0) == 0) {
        if (gate_part.back() != ']') {
            throw ParseError("unterminated matrix in '" + literal + "'");
        }
        std::string body = gate_part.substr(2, gate_part.size() - 3);
        std::vector<std::vector<cdouble>> rows;
        std::stringstream rs(body);
        std::string row;
        while (std::getline(rs, row, ';')) {
            std::vector<cdouble> entries;
            std::stringstream es(row);
            std::string ent;
            while (std::getline(es, ent, ',')) {
                entries.push_back(parse_complex(ent));
            }
            rows.push_back(std::move(entries));
        }
        unsigned dim = static_cast<unsigned>(rows.size());
        if (dim != 2 && dim != 3) {
            throw ParseError("matrix must be 2x2 or 3x3 in '" + literal + "'");
        }
        std::array<cdouble, 9> m{};
        for (unsigned r = 0; r < dim; ++r) {
            if (rows[r].size() != dim) {
                throw ParseError("ragged matrix in '" + literal + "'");
            }
            for (unsigned c = 0; c < dim; ++c) {
                m[r * dim + c] = rows[r][c];
            }
        }
        rule.gate = Gate1(dim, m);
        rule.label = "";
        return rule;
    }
    rule.gate = named_gate(gate_part);
    rule.label = gate_part == "X" ? "INV" : gate_part;
    return rule;
}

std::string format_sequence(const PulseSequence &seq) {
    std::string s;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) {
            s += " ";
        }
        s += format_rule(seq[i]);
    }
    return s;
}

PulseSequence parse_sequence(const std::string &text) {
    PulseSequence seq;
    std::stringstream ls(text);
    std::string line;
    while (std::getline(ls, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::stringstream ws(line);
        std::string tok;
        while (ws >> tok) {
            seq.push_back(parse_rule(tok));
        }
    }
    return seq;
}

PulseSequence load_pulse_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open pulse file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_sequence(buf.str());
}

void save_pulse_file(const std::string &path, const PulseSequence &seq) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write pulse file '" + path + "'");
    }
    out << format_sequence(seq) << "\n";
}

}  // namespace gqca
