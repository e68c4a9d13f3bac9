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

#include "gqca/library.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gqca/transport.hpp"
#include "gqca/util.hpp"

namespace gqca {

namespace {

std::string kind_name(GateSpec::Kind kind) {
    switch (kind) {
        case GateSpec::Kind::OneQubit: return "OneQubit";
        case GateSpec::Kind::ControlledU: return "ControlledU";
        case GateSpec::Kind::CCU: return "CCU";
    }
    return "?";
}

GateSpec::Kind kind_from_name(const std::string &s) {
    if (s == "OneQubit") return GateSpec::Kind::OneQubit;
    if (s == "ControlledU") return GateSpec::Kind::ControlledU;
    if (s == "CCU") return GateSpec::Kind::CCU;
    throw ParseError("library: unknown gate kind '" + s + "'");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::string GateLibrary::default_dir() {
#ifdef GQCA_DATA_DIR
    return std::string(GQCA_DATA_DIR) + "/golden";
#else
    return "data/golden";
#endif
}

void GateLibrary::add(LibraryEntry entry) {
    entry.fnv64 = fnv1a64(format_sequence(entry.sequence));
    entries_.push_back(std::move(entry));
}

const LibraryEntry &GateLibrary::find(GateSpec::Kind kind, const std::string &senses,
                                      const std::vector<long> &control_offsets) const {
    for (const LibraryEntry &e : entries_) {
        if (e.kind == kind && e.senses == senses && e.control_offsets == control_offsets) {
            return e;
        }
    }
    std::string offs;
    for (long o : control_offsets) {
        offs += std::to_string(o) + ",";
    }
    throw MissingLibraryEntry("no library entry for " + kind_name(kind) + " senses '" + senses +
                              "' control offsets [" + offs + "]");
}

const LibraryEntry &GateLibrary::by_name(const std::string &name) const {
    for (const LibraryEntry &e : entries_) {
        if (e.name == name) {
            return e;
        }
    }
    throw MissingLibraryEntry("no library entry named '" + name + "'");
}

Gate1 GateLibrary::slot_gate(const LibraryEntry &entry, const Gate1 &u) {
    if (u.dim() == 3) {
        // the 3-level readout swap exchanges the representative of logical 1
        // with the Fluor level; conjugate when logical 1 reads Up instead
        if (entry.trigger.one_reads_down) {
            return u;
        }
        Gate1 x3 = gates::inversion().promoted_to(3);
        std::array<cdouble, 9> m{};
        for (unsigned r = 0; r < 3; ++r) {
            for (unsigned c = 0; c < 3; ++c) {
                cdouble acc = 0;
                for (unsigned i = 0; i < 3; ++i) {
                    for (unsigned j = 0; j < 3; ++j) {
                        acc += x3.at(r, i) * u.at(i, j) * x3.at(j, c);
                    }
                }
                m[r * 3 + c] = acc;
            }
        }
        return Gate1(3, m);
    }
    return entry.trigger.one_reads_down
               ? multiply2(multiply2(gates::pauli_x(), u), gates::pauli_x())
               : u;
}

AssembledGate GateLibrary::assemble(const Layout &layout, const GateSpec &spec) const {
    layout.validate();
    size_t app_target = layout.qubit_slots.at(spec.target);
    std::vector<long> app_offsets;
    if (spec.kind != GateSpec::Kind::OneQubit) {
        app_offsets.push_back(static_cast<long>(layout.qubit_slots.at(spec.control1)) -
                              static_cast<long>(app_target));
    }
    if (spec.kind == GateSpec::Kind::CCU) {
        app_offsets.push_back(static_cast<long>(layout.qubit_slots.at(spec.control2)) -
                              static_cast<long>(app_target));
    }
    const LibraryEntry &entry = find(spec.kind, spec.sense_signature(), app_offsets);

    Gate1 cell_gate = slot_gate(entry, spec.u);
    std::string label = spec.u_label == "U" ? "" : spec.u_label;
    if (cell_gate.dim() == 2 && !cell_gate.approx_equal(spec.u, 1e-15)) {
        label = "";  // cell-level gate differs from the logical name
    }

    if (!layout.cu_slot || !entry.layout.cu_slot) {
        // entries hosted on CU-free layouts (end-cell constructions) apply
        // only at their exact slot positions
        if (entry.layout.cu_slot.has_value() != layout.cu_slot.has_value() ||
            layout.qubit_slots.at(spec.target) != entry.layout.qubit_slots.at(entry.roles.at(0))) {
            throw MissingLibraryEntry("entry '" + entry.name +
                                      "' is position-locked to its synthesis layout");
        }
        AssembledGate out;
        out.pulses = substitute_slot(entry.sequence, entry.slot_index, cell_gate, label);
        out.slot_index = entry.slot_index;
        out.entry = &entry;
        return out;
    }

    long app_cu_offset = static_cast<long>(*layout.cu_slot) - static_cast<long>(app_target);
    long shift = entry.cu_offset - app_cu_offset;  // even: both offsets are odd
    if (shift % 2 != 0) {
        throw Error("assemble: misaligned CU offset (parity)");
    }
    long k = shift / 2;  // transport(k) moves the CU +k and the qubits -k

    PulseSequence body = substitute_slot(entry.sequence, entry.slot_index, cell_gate, label);
    if (k % 2 != 0) {
        body = parity_swapped(body);
    }

    PulseSequence in = transport(k);
    PulseSequence pulses = in;
    pulses.insert(pulses.end(), body.begin(), body.end());
    PulseSequence back = inverse_sequence(in);
    pulses.insert(pulses.end(), back.begin(), back.end());

    AssembledGate out;
    out.pulses = std::move(pulses);
    out.slot_index = in.size() + entry.slot_index;
    out.entry = &entry;
    return out;
}

void GateLibrary::apply_gate(QuantumState &state, const Layout &layout,
                             const GateSpec &spec) const {
    AssembledGate gate = assemble(layout, spec);
    apply_sequence(state, gate.pulses);
}

CellConfig GateLibrary::apply_gate(const CellConfig &config, const Layout &layout,
                                   const GateSpec &spec) const {
    AssembledGate gate = assemble(layout, spec);
    return classical_apply_sequence(config, gate.pulses);
}

std::string GateLibrary::manifest_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["entries"] = nlohmann::json::array();
    for (const LibraryEntry &e : entries_) {
        nlohmann::json je;
        je["name"] = e.name;
        je["kind"] = kind_name(e.kind);
        je["senses"] = e.senses;
        je["layout"] = format_layout(e.layout);
        je["roles"] = e.roles;
        je["file"] = e.name + ".pulse";
        je["slot_index"] = e.slot_index;
        je["trigger"] = {
            {"kind", e.trigger.kind == CellType::A ? "A" : "B"},
            {"field", e.trigger.field},
            {"cell", e.trigger.cell},
            {"one_reads_down", e.trigger.one_reads_down},
        };
        je["control_offsets"] = e.control_offsets;
        je["cu_offset"] = e.cu_offset;
        char hex[32];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(e.fnv64));
        je["fnv64"] = hex;
        j["entries"].push_back(je);
    }
    return j.dump(2) + "\n";
}

void GateLibrary::save(const std::string &dir) const {
    for (const LibraryEntry &e : entries_) {
        save_pulse_file(dir + "/" + e.name + ".pulse", e.sequence);
    }
    std::ofstream out(dir + "/manifest.json");
    if (!out) {
        throw Error("cannot write manifest in '" + dir + "'");
    }
    out << manifest_json();
}

GateLibrary GateLibrary::load(const std::string &dir) {
    GateLibrary lib;
    nlohmann::json j = nlohmann::json::parse(read_file(dir + "/manifest.json"));
    if (j.value("schema", 0) != 1) {
        throw Error("library manifest: unsupported schema");
    }
    for (const auto &je : j.at("entries")) {
        LibraryEntry e;
        e.name = je.at("name").get<std::string>();
        e.kind = kind_from_name(je.at("kind").get<std::string>());
        e.senses = je.at("senses").get<std::string>();
        e.layout = parse_layout(je.at("layout").get<std::string>());
        e.roles = je.at("roles").get<std::vector<size_t>>();
        e.slot_index = je.at("slot_index").get<size_t>();
        const auto &jt = je.at("trigger");
        e.trigger.kind = jt.at("kind").get<std::string>() == "A" ? CellType::A : CellType::B;
        e.trigger.field = jt.at("field").get<int>();
        e.trigger.cell = jt.at("cell").get<size_t>();
        e.trigger.one_reads_down = jt.at("one_reads_down").get<bool>();
        e.control_offsets = je.at("control_offsets").get<std::vector<long>>();
        e.cu_offset = je.at("cu_offset").get<long>();
        std::string text = read_file(dir + "/" + je.at("file").get<std::string>());
        e.sequence = parse_sequence(text);
        e.fnv64 = fnv1a64(format_sequence(e.sequence));
        uint64_t want = std::stoull(je.at("fnv64").get<std::string>(), nullptr, 16);
        if (e.fnv64 != want) {
            throw Error("library: integrity stamp mismatch for entry '" + e.name + "'");
        }
        if (e.slot_index >= e.sequence.size() || !e.sequence[e.slot_index].is_slot()) {
            throw Error("library: entry '" + e.name + "' slot index does not mark a U slot");
        }
        lib.entries_.push_back(std::move(e));
    }
    return lib;
}

}  // namespace gqca
