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

#include "gqca/logical.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gqca {

namespace {

constexpr double kPi = 3.14159265358979323846;

Gate1 gate_by_label(const std::string &label) {
    if (label == "X") return gates::pauli_x();
    if (label == "H") return gates::hadamard();
    if (label == "Z") return gates::pauli_z();
    if (label == "T") return gates::phase(kPi / 4.0);
    if (label == "FL") return gates::readout_swap();
    throw ParseError("unknown gate label '" + label + "'");
}

}  // namespace

std::string GateSpec::sense_signature() const {
    switch (kind) {
        case Kind::OneQubit: return "";
        case Kind::ControlledU: return control1_on_one ? "1" : "0";
        case Kind::CCU:
            return std::string(control1_on_one ? "1" : "0") + (control2_on_one ? "1" : "0");
    }
    return "";
}

std::string GateSpec::literal() const {
    std::string head;
    switch (kind) {
        case Kind::OneQubit: head = ""; break;
        case Kind::ControlledU: head = control1_on_one ? "C-" : "C0-"; break;
        case Kind::CCU: {
            std::string sig = sense_signature();
            head = sig == "11" ? "CC-" : "CC" + sig + "-";
            break;
        }
    }
    std::string s = head + u_label + "@";
    if (kind == Kind::CCU) {
        s += std::to_string(control1) + "," + std::to_string(control2) + ",";
    } else if (kind == Kind::ControlledU) {
        s += std::to_string(control1) + ",";
    }
    s += std::to_string(target);
    return s;
}

GateSpec GateSpec::from_literal(const std::string &literal) {
    GateSpec spec;
    size_t at = literal.find('@');
    if (at == std::string::npos) {
        throw ParseError("gate spec needs '@': '" + literal + "'");
    }
    std::string head = literal.substr(0, at);
    auto ccu_sense = [&](const std::string &sig) {
        spec.kind = Kind::CCU;
        spec.control1_on_one = sig[0] == '1';
        spec.control2_on_one = sig[1] == '1';
    };
    if (head.rfind("CC00-", 0) == 0) {
        ccu_sense("00");
        head = head.substr(5);
    } else if (head.rfind("CC01-", 0) == 0) {
        ccu_sense("01");
        head = head.substr(5);
    } else if (head.rfind("CC10-", 0) == 0) {
        ccu_sense("10");
        head = head.substr(5);
    } else if (head.rfind("CC0-", 0) == 0) {
        ccu_sense("00");
        head = head.substr(4);
    } else if (head.rfind("CC-", 0) == 0) {
        ccu_sense("11");
        head = head.substr(3);
    } else if (head.rfind("C0-", 0) == 0) {
        spec.kind = Kind::ControlledU;
        spec.control1_on_one = false;
        head = head.substr(3);
    } else if (head.rfind("C-", 0) == 0) {
        spec.kind = Kind::ControlledU;
        head = head.substr(2);
    } else {
        spec.kind = Kind::OneQubit;
    }
    spec.u_label = head;
    spec.u = gate_by_label(head);

    std::vector<size_t> idx;
    std::string tail = literal.substr(at + 1);
    size_t pos = 0;
    while (pos <= tail.size()) {
        size_t comma = tail.find(',', pos);
        std::string tok = tail.substr(pos, comma == std::string::npos ? comma : comma - pos);
        idx.push_back(std::stoul(tok));
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    size_t want = spec.kind == Kind::OneQubit ? 1 : (spec.kind == Kind::ControlledU ? 2 : 3);
    if (idx.size() != want) {
        throw ParseError("gate spec '" + literal + "' expects " + std::to_string(want) +
                         " qubit indices");
    }
    if (spec.kind == Kind::CCU) {
        spec.control1 = idx[0];
        spec.control2 = idx[1];
        spec.target = idx[2];
    } else if (spec.kind == Kind::ControlledU) {
        spec.control1 = idx[0];
        spec.target = idx[1];
    } else {
        spec.target = idx[0];
    }
    auto ops = spec.operands();
    for (size_t i = 0; i < ops.size(); ++i) {
        for (size_t j = i + 1; j < ops.size(); ++j) {
            if (ops[i] == ops[j]) {
                throw ParseError("gate spec '" + literal + "' repeats a qubit index");
            }
        }
    }
    return spec;
}

std::vector<size_t> GateSpec::operands() const {
    switch (kind) {
        case Kind::OneQubit: return {target};
        case Kind::ControlledU: return {control1, target};
        case Kind::CCU: return {control1, control2, target};
    }
    return {};
}

bool GateSpec::enabled_on(size_t index, size_t n_qubits) const {
    auto bit = [&](size_t q) { return (index >> (n_qubits - 1 - q)) & 1; };
    switch (kind) {
        case Kind::OneQubit: return true;
        case Kind::ControlledU:
            return bit(control1) == static_cast<size_t>(control1_on_one ? 1 : 0);
        case Kind::CCU:
            return bit(control1) == static_cast<size_t>(control1_on_one ? 1 : 0) &&
                   bit(control2) == static_cast<size_t>(control2_on_one ? 1 : 0);
    }
    return false;
}

std::vector<cdouble> logical_matrix(const GateSpec &spec, size_t n_qubits) {
    if (spec.u.dim() != 2) {
        throw DimensionMismatch("logical_matrix expects a 2x2 gate");
    }
    size_t dim = size_t{1} << n_qubits;
    std::vector<cdouble> M(dim * dim, cdouble{0.0, 0.0});
    size_t target_mask = size_t{1} << (n_qubits - 1 - spec.target);
    for (size_t in = 0; in < dim; ++in) {
        if (!spec.enabled_on(in, n_qubits)) {
            M[in * dim + in] = 1.0;
            continue;
        }
        unsigned tbit = (in & target_mask) ? 1u : 0u;
        for (unsigned out_bit = 0; out_bit < 2; ++out_bit) {
            size_t out = (in & ~target_mask) | (out_bit ? target_mask : 0);
            M[out * dim + in] += spec.u.at(out_bit, tbit);
        }
    }
    return M;
}

double LogicalAction::max_deviation(const std::vector<cdouble> &target) const {
    double worst = 0.0;
    for (size_t k = 0; k < matrix.size(); ++k) {
        worst = std::max(worst, std::abs(matrix[k] - target[k]));
    }
    return worst;
}

double LogicalAction::unitarity_defect() const {
    size_t dim = size_t{1} << n_qubits;
    double worst = 0.0;
    for (size_t r = 0; r < dim; ++r) {
        for (size_t c = 0; c < dim; ++c) {
            cdouble acc = 0;
            for (size_t k = 0; k < dim; ++k) {
                acc += std::conj(matrix[k * dim + r]) * matrix[k * dim + c];
            }
            if (r == c) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

LogicalAction extract_logical_action(const PulseSequence &seq, const Layout &layout, Mode mode) {
    layout.validate(false);
    const size_t n_q = layout.n_qubits();
    const size_t words = size_t{1} << n_q;
    const bool cu = layout.cu_slot.has_value();
    const long reach = static_cast<long>(seq.size()) + 2;

    // candidate displacement -> column-major amplitude table
    std::map<long, std::vector<cdouble>> tables;
    for (long d = -reach; d <= reach; ++d) {
        tables[d] = std::vector<cdouble>(words * words, cdouble{0.0, 0.0});
    }

    const bool classical = sequence_is_classical(seq);
    std::optional<BasisIndexer> ix;
    if (!classical) {
        ix.emplace(layout.n_cells, mode);  // dense path only; large arrays stay classical
    }

    for (size_t in = 0; in < words; ++in) {
        CellConfig start = encode(layout, word_from_index(in, n_q, cu));
        if (classical) {
            PhasedConfig pc = classical_apply_sequence_phased({start, 1.0}, seq, mode);
            for (auto &[d, table] : tables) {
                auto decoded = try_decode(layout, pc.config, d);
                if (decoded) {
                    table[word_index(*decoded) * words + in] = pc.phase;
                }
            }
        } else {
            QuantumState psi = QuantumState::basis_state(start, mode);
            apply_sequence(psi, seq);
            for (auto &[d, table] : tables) {
                try {
                    Layout frame = layout.displaced(d);
                    frame.validate(false);
                    for (size_t out = 0; out < words; ++out) {
                        CellConfig target = encode(frame, word_from_index(out, n_q, cu));
                        table[out * words + in] = psi.amplitude(ix->rank(target));
                    }
                } catch (const InvalidConfig &) {
                    continue;  // blocks collide in this frame; no coded states there
                }
            }
        }
    }

    long best_d = 0;
    double best_mass = -1.0;
    for (const auto &[d, table] : tables) {
        double mass = 0.0;
        for (const cdouble &a : table) {
            mass += std::norm(a);
        }
        bool better = mass > best_mass + 1e-12;
        bool tie = std::abs(mass - best_mass) <= 1e-12;
        if (better || (tie && (std::abs(d) < std::abs(best_d) ||
                               (std::abs(d) == std::abs(best_d) && d < best_d)))) {
            best_mass = mass;
            best_d = d;
        }
    }

    LogicalAction action;
    action.n_qubits = n_q;
    action.displacement = best_d;
    action.matrix = tables[best_d];
    action.leakage = 0.0;
    for (size_t in = 0; in < words; ++in) {
        double kept = 0.0;
        for (size_t out = 0; out < words; ++out) {
            kept += std::norm(action.matrix[out * words + in]);
        }
        action.leakage = std::max(action.leakage, 1.0 - kept);
    }
    return action;
}

}  // namespace gqca
