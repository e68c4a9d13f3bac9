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

#include <map>
#include <string>
#include <vector>

#include "gqca/state.hpp"
#include "gqca/synth.hpp"

namespace gqca {

/// One stored gate sequence: the synthesis geometry, the slot position, and
/// the trigger orientation needed to place a concrete unitary in the slot.
struct LibraryEntry {
    std::string name;
    GateSpec::Kind kind = GateSpec::Kind::OneQubit;
    std::string senses;  // "", "1", "0", "11".."00"
    Layout layout;       // canonical synthesis layout
    /// Operand qubit indices within `layout`: target first, then controls in
    /// CU-travel order (the control the CU meets last is listed last).
    std::vector<size_t> roles;
    PulseSequence sequence;  // carries the U slot
    size_t slot_index = 0;
    TriggerInfo trigger;
    /// Block-start offsets of the controls relative to the target slot, and
    /// of the CU relative to the target slot. Applications must reproduce
    /// them exactly.
    std::vector<long> control_offsets;
    long cu_offset = 0;
    uint64_t fnv64 = 0;
};

/// The pulse stream realizing `spec` on `layout`: transport bringing the CU
/// to the entry's relative position (parity-swapping the stored sequence
/// after an odd transport), the sequence with the concrete gate substituted,
/// and the transport undone. Net frame displacement is zero and the CU ends
/// in its slot.
struct AssembledGate {
    PulseSequence pulses;
    size_t slot_index = 0;  // position of the substituted gate pulse
    const LibraryEntry *entry = nullptr;
};

class GateLibrary {
  public:
    /// Loads manifest.json plus the .pulse files it names and verifies the
    /// integrity stamps. `dir` defaults to the checked-in golden data.
    static GateLibrary load(const std::string &dir = default_dir());
    static std::string default_dir();

    void add(LibraryEntry entry);
    const std::vector<LibraryEntry> &entries() const { return entries_; }
    const LibraryEntry &find(GateSpec::Kind kind, const std::string &senses,
                             const std::vector<long> &control_offsets) const;
    const LibraryEntry &by_name(const std::string &name) const;

    /// Cell-level slot gate for a logical 2x2 `u` under the entry's trigger
    /// orientation (conjugated by inversion when logical one reads Up).
    static Gate1 slot_gate(const LibraryEntry &entry, const Gate1 &u);

    AssembledGate assemble(const Layout &layout, const GateSpec &spec) const;

    /// Applies the spec's unitary to the coded state through the pulse
    /// stream; the CU is returned to its slot.
    void apply_gate(QuantumState &state, const Layout &layout, const GateSpec &spec) const;

    /// Classical application for permutation gates (U = X and friends).
    CellConfig apply_gate(const CellConfig &config, const Layout &layout,
                          const GateSpec &spec) const;

    std::string manifest_json() const;
    void save(const std::string &dir) const;

  private:
    std::vector<LibraryEntry> entries_;
};

}  // namespace gqca
