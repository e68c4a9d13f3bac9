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

#include <cstddef>
#include <string>
#include <vector>

#include "gqca/cell.hpp"

namespace gqca {

/// Symmetric power-law coupling J(r) = J1 * r^(-k) between cells, truncated
/// at half-chain distance `cutoff` or summed analytically (cutoff = 0).
struct InteractionModel {
    double j1 = 1.0;
    double k = 3.0;
    size_t cutoff = 0;    // 0: analytic tail; otherwise sum r = 2..cutoff
    double gap_a = 0.0;   // bare level splitting of type-A cells
    double gap_b = 0.0;
    double disorder = 0.0;  // per-cell bare-gap spread, broadens intervals

    void validate() const;
};

/// Frequency band of a driven cell at a fixed field value: transition
/// frequencies stay within [lo, hi] over every assignment of the
/// non-neighbor cells.
struct MultipletInterval {
    CellType kind = CellType::A;
    int field = 0;
    double lo = 0.0;
    double hi = 0.0;
    bool divergent = false;  // k <= 1: half-width unbounded as the cutoff grows

    double center() const { return 0.5 * (lo + hi); }
    double half_width() const { return 0.5 * (hi - lo); }
};

/// Sum over the non-neighbor couplings on one side, r = 2..cutoff (or the
/// exact tail when cutoff = 0): Σ r^(-k).
double tail_sum(double k, size_t cutoff);

/// Worst-case multiplet half-width W = 2 * J1 * Σ_{r>=2} r^(-k): every
/// non-neighbor cell on both sides at its extreme contribution. Includes the
/// disorder broadening.
double multiplet_half_width(const InteractionModel &model);

MultipletInterval multiplet_interval(const InteractionModel &model, CellType kind, int field);

/// Smallest gap between the interval edges of adjacent field values,
/// 2*J1 - 2*W (minus 2*disorder); positive iff the multiplets never overlap.
double overlap_margin(const InteractionModel &model, CellType kind);

struct ScanRow {
    double k = 0.0;
    double half_width = 0.0;
    double margin = 0.0;
    bool separated = false;
    bool divergent = false;
};

struct ThresholdScan {
    std::vector<ScanRow> rows;
    double crossover_k = 0.0;  // margin = 0 <=> Σ_{r>=2} r^(-k*) = 1/2
};

ThresholdScan threshold_scan(double j1, double k_lo, double k_hi, double k_step, size_t cutoff,
                             double disorder = 0.0);

/// Bisection for the exponent where the margin vanishes, to `tol`.
double crossover_exponent(double j1, double disorder = 0.0, double tol = 1e-6);

std::string scan_csv(const ThresholdScan &scan);

}  // namespace gqca
