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

#include "gqca/gate.hpp"

#include <cmath>

#include "gqca/errors.hpp"

namespace gqca {

Gate1::Gate1(unsigned dim, std::array<cdouble, 9> entries) : dim_(dim), m_(entries) {
    if (dim != 2 && dim != 3) {
        throw DimensionMismatch("gate dimension must be 2 or 3");
    }
}

double Gate1::unitarity_defect() const {
    double worst = 0.0;
    for (unsigned r = 0; r < dim_; ++r) {
        for (unsigned c = 0; c < dim_; ++c) {
            cdouble acc = 0;
            for (unsigned k = 0; k < dim_; ++k) {
                acc += std::conj(at(k, r)) * at(k, c);
            }
            if (r == c) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

std::optional<PermutationAction> Gate1::permutation_action(double tol) const {
    PermutationAction act;
    std::array<bool, 3> row_used{};
    for (unsigned c = 0; c < dim_; ++c) {
        int hit = -1;
        for (unsigned r = 0; r < dim_; ++r) {
            double mag = std::abs(at(r, c));
            if (mag <= tol) {
                continue;
            }
            if (std::abs(mag - 1.0) > tol || hit >= 0) {
                return std::nullopt;
            }
            hit = static_cast<int>(r);
        }
        if (hit < 0 || row_used[static_cast<size_t>(hit)]) {
            return std::nullopt;
        }
        row_used[static_cast<size_t>(hit)] = true;
        act.map[c] = static_cast<unsigned>(hit);
        act.phase[c] = at(static_cast<unsigned>(hit), c);
    }
    return act;
}

bool Gate1::is_identity(double tol) const {
    for (unsigned r = 0; r < dim_; ++r) {
        for (unsigned c = 0; c < dim_; ++c) {
            cdouble want = (r == c) ? 1.0 : 0.0;
            if (std::abs(at(r, c) - want) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool Gate1::is_diagonal(double tol) const {
    for (unsigned r = 0; r < dim_; ++r) {
        for (unsigned c = 0; c < dim_; ++c) {
            if (r != c && std::abs(at(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

Gate1 Gate1::adjoint() const {
    std::array<cdouble, 9> out{};
    for (unsigned r = 0; r < dim_; ++r) {
        for (unsigned c = 0; c < dim_; ++c) {
            out[c * dim_ + r] = std::conj(at(r, c));
        }
    }
    return Gate1(dim_, out);
}

Gate1 Gate1::promoted_to(unsigned dim) const {
    if (dim == dim_) {
        return *this;
    }
    if (dim == 3 && dim_ == 2) {
        std::array<cdouble, 9> out{};
        out[0 * 3 + 0] = at(0, 0);
        out[0 * 3 + 1] = at(0, 1);
        out[1 * 3 + 0] = at(1, 0);
        out[1 * 3 + 1] = at(1, 1);
        out[2 * 3 + 2] = 1.0;
        return Gate1(3, out);
    }
    throw DimensionMismatch("cannot promote a " + std::to_string(dim_) + "x" +
                            std::to_string(dim_) + " gate to dimension " + std::to_string(dim));
}

bool Gate1::approx_equal(const Gate1 &o, double tol) const {
    if (dim_ != o.dim_) {
        return false;
    }
    for (unsigned r = 0; r < dim_; ++r) {
        for (unsigned c = 0; c < dim_; ++c) {
            if (std::abs(at(r, c) - o.at(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

namespace gates {

Gate1 inversion() {
    return Gate1(2, {0, 1, 1, 0, 0, 0, 0, 0, 0});
}

Gate1 identity2() {
    return Gate1(2, {1, 0, 0, 1, 0, 0, 0, 0, 0});
}

Gate1 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return Gate1(2, {s, s, s, -s, 0, 0, 0, 0, 0});
}

Gate1 pauli_x() {
    return inversion();
}

Gate1 pauli_z() {
    return Gate1(2, {1, 0, 0, -1, 0, 0, 0, 0, 0});
}

Gate1 phase(double theta) {
    return Gate1(2, {1, 0, 0, std::polar(1.0, theta), 0, 0, 0, 0, 0});
}

Gate1 readout_swap() {
    return Gate1(3, {0, 0, 1, 0, 1, 0, 1, 0, 0});
}

}  // namespace gates

Gate1 multiply2(const Gate1 &a, const Gate1 &b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw DimensionMismatch("multiply2 expects 2x2 gates");
    }
    std::array<cdouble, 9> out{};
    for (unsigned r = 0; r < 2; ++r) {
        for (unsigned c = 0; c < 2; ++c) {
            out[r * 2 + c] = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
        }
    }
    return Gate1(2, out);
}

}  // namespace gqca
