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

#include <array>
#include <complex>
#include <optional>
#include <string>

namespace gqca {

using cdouble = std::complex<double>;

/// Tolerance for the unitarity check ‖G†G − I‖_max.
constexpr double kUnitaryTol = 1e-10;
/// Entries within this distance of {0, unit modulus} qualify a gate for the
/// classical (permutation) fast path.
constexpr double kPermutationTol = 1e-12;

/// Decomposition of a permutation-up-to-phase gate: column c maps basis
/// level c to level `map[c]` with phase `phase[c]`.
struct PermutationAction {
    std::array<unsigned, 3> map{};
    std::array<cdouble, 3> phase{};
};

/// Single-cell unitary, dimension 2 (or 3 in 3-level mode). Row-major,
/// basis order {Down, Up, Fluor}.
class Gate1 {
  public:
    Gate1() : dim_(2) { m_ = {1, 0, 0, 1, 0, 0, 0, 0, 0}; }
    Gate1(unsigned dim, std::array<cdouble, 9> entries);

    unsigned dim() const { return dim_; }
    cdouble at(unsigned row, unsigned col) const { return m_[row * dim_ + col]; }

    /// ‖G†G − I‖_max.
    double unitarity_defect() const;
    bool is_unitary(double tol = kUnitaryTol) const { return unitarity_defect() <= tol; }

    /// Permutation-with-phase structure, or nullopt for gates that create
    /// superposition (e.g. Hadamard).
    std::optional<PermutationAction> permutation_action(double tol = kPermutationTol) const;

    bool is_identity(double tol = kPermutationTol) const;
    bool is_diagonal(double tol = kPermutationTol) const;

    Gate1 adjoint() const;

    /// Extends a 2x2 gate to 3x3 fixing the Fluor level; 3x3 gates pass
    /// through unchanged.
    Gate1 promoted_to(unsigned dim) const;

    bool approx_equal(const Gate1 &o, double tol) const;

    bool operator==(const Gate1 &o) const = default;

  private:
    unsigned dim_;
    std::array<cdouble, 9> m_;
};

namespace gates {

/// Inversion |Down> <-> |Up|; the default gate of an update rule.
Gate1 inversion();
Gate1 identity2();
Gate1 hadamard();
Gate1 pauli_x();
Gate1 pauli_z();
/// diag(1, e^{i theta}).
Gate1 phase(double theta);
/// 3-level swap of Down and Fluor, fixing Up; the fluorescence readout gate.
Gate1 readout_swap();

}  // namespace gates

/// 2x2 matrix product a*b (both must be 2x2).
Gate1 multiply2(const Gate1 &a, const Gate1 &b);

}  // namespace gqca
