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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gqca/spectra.hpp"

using namespace gqca;

namespace {

// brute-force half-width: every assignment of the non-neighbor cells at
// distances 2..R on both sides to extreme contributions
double brute_half_width(double j1, double k, size_t R) {
    size_t m = R - 1;  // distances 2..R per side
    size_t combos = size_t{1} << (2 * m);
    double worst = 0.0;
    for (size_t bits = 0; bits < combos; ++bits) {
        double shift = 0.0;
        for (size_t i = 0; i < 2 * m; ++i) {
            double r = 2.0 + static_cast<double>(i % m);
            double sign = (bits >> i) & 1 ? 1.0 : -1.0;
            shift += sign * j1 * std::pow(r, -k);
        }
        worst = std::max(worst, std::abs(shift));
    }
    return worst;
}

}  // namespace

TEST_CASE("half-width matches the exact tail") {
    InteractionModel m;
    m.k = 3.0;
    // truncated at 1e6 against the analytic tail
    InteractionModel trunc = m;
    trunc.cutoff = 1000000;
    CHECK(std::abs(multiplet_half_width(trunc) - multiplet_half_width(m)) < 1e-9);
    // known value at k = 3
    CHECK(multiplet_half_width(m) == doctest::Approx(0.4041138064).epsilon(1e-9));
}

TEST_CASE("brute-force enumeration matches the interval bounds") {
    for (size_t R = 3; R <= 7; ++R) {
        for (double k : {1.5, 2.0, 3.0}) {
            InteractionModel m;
            m.k = k;
            m.cutoff = R;
            double w = multiplet_half_width(m);
            double brute = brute_half_width(1.0, k, R);
            REQUIRE(std::abs(w - brute) < 1e-12);
            // every achievable shift stays inside the interval
            MultipletInterval iv = multiplet_interval(m, CellType::A, 0);
            REQUIRE(iv.lo == doctest::Approx(-w));
            REQUIRE(iv.hi == doctest::Approx(w));
        }
    }
}

TEST_CASE("one side doubled equals both sides") {
    for (size_t R = 3; R <= 12; ++R) {
        double one_side = tail_sum(2.5, R);
        InteractionModel m;
        m.k = 2.5;
        m.cutoff = R;
        CHECK(multiplet_half_width(m) == doctest::Approx(2.0 * one_side));
    }
}

TEST_CASE("interval centers step by twice the coupling") {
    InteractionModel m;
    m.k = 3.0;
    m.gap_b = 10.0;
    auto f0 = multiplet_interval(m, CellType::B, 0);
    auto f2 = multiplet_interval(m, CellType::B, 2);
    CHECK(f2.center() - f0.center() == doctest::Approx(2.0));
    // the nearest-neighbor-only limit collapses the interval
    InteractionModel inf = m;
    inf.k = 60.0;
    auto iv = multiplet_interval(inf, CellType::A, -2);
    CHECK(iv.half_width() < 1e-15);
    CHECK(overlap_margin(inf, CellType::A) == doctest::Approx(2.0));
}

TEST_CASE("margins: separated at k=3, overlapping at k=2, divergent at k=1") {
    InteractionModel m;
    m.k = 3.0;
    CHECK(overlap_margin(m, CellType::A) == doctest::Approx(1.1917723872).epsilon(1e-9));
    m.k = 2.0;
    // Basel sum: margin = 2 - 4*(pi^2/6 - 1) < 0
    CHECK(overlap_margin(m, CellType::A) ==
          doctest::Approx(2.0 - 4.0 * (3.14159265358979323846 * 3.14159265358979323846 / 6.0 -
                                       1.0)));
    CHECK(overlap_margin(m, CellType::A) < 0.0);
    // harmonic divergence: the margin keeps falling as the cutoff grows
    InteractionModel h1 = m, h2 = m;
    h1.k = 1.0;
    h2.k = 1.0;
    h1.cutoff = 100;
    h2.cutoff = 10000;
    CHECK(overlap_margin(h2, CellType::A) < overlap_margin(h1, CellType::A) - 1.0);
    // the analytic tail at k <= 1 reports the divergence instead of a number
    InteractionModel div;
    div.k = 1.0;
    CHECK(std::isinf(multiplet_half_width(div)));
    CHECK(multiplet_interval(div, CellType::A, 0).divergent);
}

TEST_CASE("half-width falls and the margin grows with the exponent") {
    double prev_w = 1e300, prev_margin = -1e300;
    for (double k = 1.5; k <= 6.0; k += 0.25) {
        InteractionModel m;
        m.k = k;
        double w = multiplet_half_width(m);
        double margin = overlap_margin(m, CellType::B);
        CHECK(w < prev_w);
        CHECK(margin > prev_margin);
        prev_w = w;
        prev_margin = margin;
    }
}

TEST_CASE("truncation error obeys the integral bound") {
    for (double k : {1.5, 2.0, 3.0, 4.0}) {
        for (size_t R : {size_t{10}, size_t{100}, size_t{1000}}) {
            InteractionModel trunc;
            trunc.k = k;
            trunc.cutoff = R;
            InteractionModel exact;
            exact.k = k;
            double bound = std::pow(static_cast<double>(R), 1.0 - k) / (k - 1.0);
            // per-side tail under the integral bound; the half-width error
            // doubles it (both sides contribute)
            double side_err = tail_sum(k, 0) - tail_sum(k, R);
            REQUIRE(side_err >= 0.0);
            REQUIRE(side_err < bound);
            double w_err = multiplet_half_width(exact) - multiplet_half_width(trunc);
            REQUIRE(w_err >= 0.0);
            REQUIRE(w_err < 2.0 * bound);
        }
    }
}

TEST_CASE("threshold scan and crossover") {
    ThresholdScan scan = threshold_scan(1.0, 1.5, 4.0, 0.5, 0);
    REQUIRE(scan.rows.size() == 6);
    CHECK(!scan.rows[0].separated);  // k = 1.5
    CHECK(!scan.rows[1].separated);  // k = 2.0
    CHECK(scan.rows[3].separated);   // k = 3.0
    // monotone in k
    for (size_t i = 1; i < scan.rows.size(); ++i) {
        CHECK(scan.rows[i].margin > scan.rows[i - 1].margin);
    }
    // crossover solves sum_{r>=2} r^-k = 1/2
    double k = scan.crossover_k;
    CHECK(k > 2.0);
    CHECK(k < 3.0);
    CHECK(std::riemann_zeta(k) - 1.0 == doctest::Approx(0.5).epsilon(1e-5));
    // margin at the crossover vanishes
    InteractionModel m;
    m.k = k;
    CHECK(std::abs(overlap_margin(m, CellType::A)) < 1e-5);
}

TEST_CASE("disorder broadens intervals and eats the margin") {
    InteractionModel m;
    m.k = 3.0;
    m.disorder = 0.1;
    InteractionModel clean;
    clean.k = 3.0;
    CHECK(multiplet_half_width(m) == doctest::Approx(multiplet_half_width(clean) + 0.1));
    CHECK(overlap_margin(m, CellType::A) ==
          doctest::Approx(overlap_margin(clean, CellType::A) - 0.2));
    ThresholdScan scan = threshold_scan(1.0, 3.0, 3.0, 1.0, 0, 0.7);
    CHECK(!scan.rows[0].separated);  // heavy disorder closes the k=3 gap
}

TEST_CASE("model validation") {
    InteractionModel m;
    m.j1 = 0.0;
    CHECK_THROWS_AS(m.validate(), Error);
    m.j1 = 1.0;
    m.cutoff = 1;
    CHECK_THROWS_AS(m.validate(), Error);
    m.cutoff = 0;
    m.disorder = -1.0;
    CHECK_THROWS_AS(m.validate(), Error);
}

TEST_CASE("scan csv shape") {
    ThresholdScan scan = threshold_scan(1.0, 3.0, 3.0, 1.0, 0);
    std::string csv = scan_csv(scan);
    CHECK(csv.rfind("k,W,margin,separated\n", 0) == 0);
    CHECK(csv.find("true") != std::string::npos);
}
