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

#include "gqca/spectra.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gqca/errors.hpp"

namespace gqca {

void InteractionModel::validate() const {
    if (j1 <= 0.0) {
        throw Error("interaction model: J1 must be positive");
    }
    if (k < 0.0) {
        throw Error("interaction model: exponent k must be nonnegative");
    }
    if (cutoff == 1) {
        throw Error("interaction model: cutoff must be >= 2 (or 0 for the analytic tail)");
    }
    if (disorder < 0.0) {
        throw Error("interaction model: disorder spread must be nonnegative");
    }
}

double tail_sum(double k, size_t cutoff) {
    if (cutoff == 0) {
        if (k <= 1.0) {
            return std::numeric_limits<double>::infinity();
        }
        return std::riemann_zeta(k) - 1.0;
    }
    // backward summation keeps the small terms from being absorbed
    double acc = 0.0;
    for (size_t r = cutoff; r >= 2; --r) {
        acc += std::pow(static_cast<double>(r), -k);
    }
    return acc;
}

double multiplet_half_width(const InteractionModel &model) {
    model.validate();
    return 2.0 * model.j1 * tail_sum(model.k, model.cutoff) + model.disorder;
}

MultipletInterval multiplet_interval(const InteractionModel &model, CellType kind, int field) {
    model.validate();
    if (field != -2 && field != 0 && field != 2) {
        throw Error("multiplet_interval: interior field values are {-2, 0, 2}");
    }
    MultipletInterval iv;
    iv.kind = kind;
    iv.field = field;
    iv.divergent = model.k <= 1.0;
    double center =
        (kind == CellType::A ? model.gap_a : model.gap_b) + field * model.j1;
    double w = multiplet_half_width(model);
    iv.lo = center - w;
    iv.hi = center + w;
    return iv;
}

double overlap_margin(const InteractionModel &model, CellType kind) {
    // adjacent field values differ by 2 in f, so centers sit 2*J1 apart and
    // the bare gap of the cell type cancels
    (void)kind;
    model.validate();
    double w = multiplet_half_width(model);
    return 2.0 * model.j1 - 2.0 * w;
}

ThresholdScan threshold_scan(double j1, double k_lo, double k_hi, double k_step, size_t cutoff,
                             double disorder) {
    if (k_step <= 0.0 || k_hi < k_lo) {
        throw Error("threshold_scan: bad k grid");
    }
    ThresholdScan scan;
    for (double k = k_lo; k <= k_hi + 1e-12; k += k_step) {
        InteractionModel m;
        m.j1 = j1;
        m.k = k;
        m.cutoff = cutoff;
        m.disorder = disorder;
        ScanRow row;
        row.k = k;
        row.divergent = k <= 1.0 && cutoff == 0;
        row.half_width = multiplet_half_width(m);
        row.margin = 2.0 * j1 - 2.0 * row.half_width;
        row.separated = !row.divergent && row.margin > 0.0 && !(k <= 1.0);
        scan.rows.push_back(row);
    }
    scan.crossover_k = crossover_exponent(j1, disorder);
    return scan;
}

double crossover_exponent(double j1, double disorder, double tol) {
    // margin(k) = 2*J1 - 2*(2*J1*(zeta(k)-1) + disorder), strictly increasing
    auto margin = [&](double k) {
        return 2.0 * j1 - 2.0 * (2.0 * j1 * (std::riemann_zeta(k) - 1.0) + disorder);
    };
    double lo = 1.0 + 1e-9, hi = 8.0;
    while (margin(hi) < 0.0) {
        hi *= 2.0;
        if (hi > 1e6) {
            throw Error("crossover_exponent: no sign change found");
        }
    }
    if (margin(lo) > 0.0) {
        throw Error("crossover_exponent: margin already positive at k -> 1");
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (margin(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::string scan_csv(const ThresholdScan &scan) {
    std::ostringstream os;
    os.precision(12);
    os << "k,W,margin,separated\n";
    for (const ScanRow &row : scan.rows) {
        os << row.k << "," << row.half_width << "," << row.margin << ","
           << (row.separated ? "true" : "false") << "\n";
    }
    return os.str();
}

}  // namespace gqca
