// Copyright 2026 The latticeft Authors
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


#include "latticeft/threshold.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "latticeft/exrec.h"

using namespace latticeft;

namespace {

/// Every matrix holds a single h-CNOT pair entry A; no ancilla or triple terms.
ModelConfig single_entry_model(uint64_t a) {
    ModelConfig c;
    c.include_triple = false;
    c.gv_total = 0;
    for (auto &m : c.matrices) {
        m.alpha[0][0] = a;
    }
    return c;
}

/// Reference coefficients of the two-dimensional map.
TwoDimParams reference_params() {
    TwoDimParams p;
    p.a = 7907;
    p.b = 55997 / 2.0;
    p.c = 93488;
    p.d = 1956;
    p.e = 18424 / 2.0;
    p.f = 35886;
    p.F = 71779;
    p.G = 77899 / 2.0;
    p.H = 26842;
    p.J = 8318;
    p.K = 32843 / 2.0;
    p.L = 21632;
    return p;
}

double rel(double a, double b) {
    return std::abs(a - b) / std::abs(b);
}

}  // namespace

TEST(threshold, binomials) {
    EXPECT_EQ(binomial(49, 2), 1176);
    EXPECT_EQ(binomial(1225, 3), 305627700);
    EXPECT_EQ(binomial(84, 2), 3486);
    EXPECT_EQ(binomial(2, 3), 0);
}

TEST(threshold, memory_rules) {
    EXPECT_EQ(parse_memory_rule("tenth"), MemoryRule::TENTH);
    EXPECT_EQ(parse_memory_rule("zero-swap"), MemoryRule::ZERO_SWAP);
    EXPECT_THROW(parse_memory_rule("half"), std::invalid_argument);
    RateVector r = initial_rates(1e-4, MemoryRule::TENTH);
    EXPECT_DOUBLE_EQ(r[0], 1e-4);
    EXPECT_DOUBLE_EQ(r[15], 1e-5);
    EXPECT_DOUBLE_EQ(r[16], 1e-5);
    EXPECT_DOUBLE_EQ(initial_rates(1e-4, MemoryRule::EQUAL)[16], 1e-4);
    RateVector z = initial_rates(1e-4, MemoryRule::ZERO_SWAP);
    EXPECT_EQ(z[9], 0);
    EXPECT_EQ(z[10], 0);
    EXPECT_DOUBLE_EQ(z[15], 1e-5);
}

TEST(threshold, model_constants) {
    auto n = reference_exrec_sizes();
    EXPECT_EQ(n[0], 1225);
    EXPECT_EQ(n[8], 616);
    EXPECT_EQ(n[15], 616);
    EXPECT_EQ(n[12], 469);
    EXPECT_EQ(n[13], 196);
    EXPECT_EQ(n[16], 378);
    auto q = trailing_ec_exponents();
    EXPECT_EQ(q[7], 2);
    EXPECT_EQ(q[9], 1);
    EXPECT_EQ(q[14], 0);
}

TEST(threshold, ancilla_pass_probability) {
    RateVector zero{};
    BadLocationCount b{};
    b[1] = 7;
    EXPECT_EQ(anc_pass_probability(zero, b), 1);
    RateVector r{};
    double g = 1e-6;
    r[1] = g;
    EXPECT_NEAR(anc_pass_probability(r, b), 1 - 7 * g - 1176 * g * g, 1e-15);
    r[1] = 0.1;
    EXPECT_EQ(anc_pass_probability(r, b), 0);
}

TEST(threshold, ec_occurs_probability) {
    EXPECT_EQ(ec_occurs_probability(1), 1);
    EXPECT_EQ(ec_occurs_probability(0), 0);
    EXPECT_NEAR(ec_occurs_probability(0.9), 0.972, 1e-12);
}

TEST(threshold, flow_map_single_term) {
    ModelConfig c = single_entry_model(0);
    c.matrices[0].alpha[0][0] = 2;
    RateVector r{};
    r[0] = 1e-3;
    RateVector out = flow_map(r, c);
    EXPECT_NEAR(out[0], 2e-6, 1e-18);
    EXPECT_EQ(out[1], 0);
    EXPECT_EQ(flow_map(RateVector{}, c), RateVector{});
}

TEST(threshold, flow_map_triple_term_fixed_point) {
    ModelConfig c;
    c.gv_total = 0;
    double p = 1 / std::sqrt(binomial(1225, 3));
    EXPECT_NEAR(p, 5.72e-5, 0.005e-5);
    RateVector r;
    r.fill(p);
    EXPECT_NEAR(flow_map(r, c)[0], p, 1e-15);
}

TEST(threshold, zero_swap_rule_rezeroes) {
    ModelConfig c = single_entry_model(5);
    c.memory_rule = MemoryRule::ZERO_SWAP;
    RateVector r;
    r.fill(1e-3);
    RateVector out = flow_map(r, c);
    EXPECT_EQ(out[9], 0);
    EXPECT_EQ(out[10], 0);
    EXPECT_GT(out[0], 0);
}

TEST(threshold, flow_map_is_monotone) {
    ModelConfig c;
    c.matrices[0] = read_matrix(default_fixtures_dir() + "/alpha0_local.mat");
    for (int t = 1; t < NUM_LOCATION_TYPES; t++) {
        c.matrices[t] = read_matrix(default_fixtures_dir() + "/alpha9_local.mat");
    }
    c.badloc = read_badloc(default_fixtures_dir() + "/badloc_local.tbl");
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 1e-3);
    for (int trial = 0; trial < 200; trial++) {
        RateVector lo, hi;
        for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
            double a = u(rng), b = u(rng);
            lo[t] = std::min(a, b);
            hi[t] = std::max(a, b);
        }
        RateVector flo = flow_map(lo, c), fhi = flow_map(hi, c);
        for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
            ASSERT_LE(flo[t], fhi[t]) << trial << " " << t;
        }
    }
}

TEST(threshold, single_entry_threshold_and_pseudothresholds) {
    // gamma' = A gamma_0^2 on every type, so gamma^R = A^(2^R - 1) gamma^(2^R) and every
    // pseudothreshold is 1/A. The finite-R criterion puts the boundary slightly lower.
    const double a = 1000;
    ModelConfig c = single_entry_model(1000);
    SearchOptions opts;
    double boundary = std::pow(a * opts.floor, 1.0 / std::pow(2.0, opts.levels)) / a;
    double g = threshold_search(c, opts);
    EXPECT_LE(g, boundary);
    EXPECT_GE(g, boundary * (1 - opts.rel_tol));
    for (int r = 1; r <= 4; r++) {
        double p = pseudothreshold(c, r, 0, opts);
        EXPECT_LT(rel(p, 1e-3), opts.rel_tol) << r;
    }
}

TEST(threshold, homogeneity_of_pair_only_map) {
    ModelConfig c = single_entry_model(1000);
    c.matrices[3].alpha[1][9] = 4000;
    double g = threshold_search(c);
    for (double kappa : {2.0, 10.0}) {
        double gk = threshold_search(c.scaled(kappa));
        EXPECT_LT(rel(gk * kappa, g), 0.01) << kappa;
    }
}

TEST(threshold, bracket_errors) {
    ModelConfig zero = single_entry_model(0);
    EXPECT_THROW(threshold_search(zero), BracketError);
    EXPECT_THROW(pseudothreshold(zero, 1, 0), BracketError);
    auto rows = pseudothreshold_table(zero, 2, {0});
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_TRUE(std::isnan(rows[0].pseudothreshold));
    EXPECT_NE(format_pseudo_csv(rows).find("1,0,nan"), std::string::npos);
}

TEST(threshold, trip_csv) {
    ModelConfig c = single_entry_model(1000);
    auto grid = log_grid(1e-5, 1e-3, 3);
    ASSERT_EQ(grid.size(), 3u);
    EXPECT_NEAR(grid[1], 1e-4, 1e-15);
    auto rows = trip_table(c, grid, 2, {0, 9});
    EXPECT_EQ(rows.size(), 12u);
    EXPECT_NEAR(rows[0].gamma_r, 1000 * 1e-10, 1e-20);
    std::string csv = format_trip_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "gamma0,level,type,gamma_r");
    EXPECT_EQ(format_pseudo_csv({}), "level,type,pseudothreshold\n");
}

TEST(threshold, fixture_parameter_extraction) {
    MalignancyMatrix a0 = read_matrix(default_fixtures_dir() + "/alpha0_local.mat");
    MalignancyMatrix a9 = read_matrix(default_fixtures_dir() + "/alpha9_local.mat");
    auto s0 = group_sums_2d(a0);
    auto s9 = group_sums_2d(a9);
    EXPECT_EQ(s0, (std::array<uint64_t, 3>{7907, 55997, 93488}));
    EXPECT_EQ(s9, (std::array<uint64_t, 3>{1956, 18424, 35886}));
    EXPECT_EQ(group_sums_wait(a0), (std::array<uint64_t, 3>{71779, 77899, 26842}));
    TwoDimParams p;
    extract_2d_params(a0, a9, p);
    extract_first_iter_params(a0, false, p);
    EXPECT_EQ(p.b, 55997 / 2.0);
    EXPECT_EQ(p.e, 18424 / 2.0);
    EXPECT_EQ(p.G, 77899 / 2.0);
    TwoDimParams z;
    extract_2d_params(MalignancyMatrix{}, MalignancyMatrix{}, z);
    EXPECT_EQ(z.a + z.b + z.c + z.d + z.e + z.f, 0);
}

TEST(threshold, map2d_reference_values) {
    // Frozen from an independent bisection and polynomial solve.
    Map2dResult r = map2d_threshold(reference_params());
    EXPECT_LT(rel(r.ratio, 0.326254), 1e-5);
    EXPECT_LT(rel(r.x_star, 2.76799e-5), 1e-5);
    EXPECT_LT(rel(r.y_star, 9.03069e-6), 1e-5);
    EXPECT_LT(rel(r.gamma_x, 1.96374e-5), 1e-5);
    EXPECT_LT(rel(r.gamma_y, 3.29497e-5), 1e-5);
    EXPECT_EQ(r.gamma_fixed_point, r.gamma_x);
    EXPECT_LT(rel(r.gamma_iterated, 2.45702e-5), 1e-4);
}

TEST(threshold, map2d_fixed_point_is_fixed) {
    TwoDimParams p = reference_params();
    Map2dResult r = map2d_threshold(p);
    double x = r.x_star, y = r.y_star;
    EXPECT_LT(rel(p.a * x * x + 2 * p.b * x * y + p.c * y * y, x), 1e-9);
    EXPECT_LT(rel(p.d * x * x + 2 * p.e * x * y + p.f * y * y, y), 1e-9);
}

TEST(threshold, map2d_decoupled_case) {
    TwoDimParams p = reference_params();
    p.a = 100;
    p.b = 50;
    p.c = 10;
    p.d = 0;
    p.e = 0;
    p.f = 1000;
    Map2dResult r = map2d_threshold(p);
    EXPECT_LT(rel(r.y_star, 1 / p.f), 1e-9);
    // x* solves a x^2 + (2b y* - 1) x + c y*^2 = 0.
    double y = 1 / p.f;
    double B = 2 * p.b * y - 1, disc = B * B - 4 * p.a * p.c * y * y;
    ASSERT_GE(disc, 0);
    double r1 = (-B - std::sqrt(disc)) / (2 * p.a), r2 = (-B + std::sqrt(disc)) / (2 * p.a);
    EXPECT_TRUE(rel(r.x_star, r1) < 1e-9 || rel(r.x_star, r2) < 1e-9);
}

TEST(threshold, map2d_scaling) {
    TwoDimParams p = reference_params();
    Map2dResult r = map2d_threshold(p);
    for (double kappa : {2.0, 10.0}) {
        Map2dResult k = map2d_threshold(p.scaled_map(kappa));
        EXPECT_LT(rel(k.x_star * kappa, r.x_star), 1e-9);
        EXPECT_LT(rel(k.y_star * kappa, r.y_star), 1e-9);
        EXPECT_LT(rel(k.gamma_fixed_point * std::sqrt(kappa), r.gamma_fixed_point), 1e-9);
        EXPECT_LT(rel(k.gamma_iterated * std::sqrt(kappa), r.gamma_iterated), 1e-4);
    }
}

TEST(threshold, map2d_without_positive_root) {
    TwoDimParams p;
    EXPECT_THROW(map2d_threshold(p), std::domain_error);
}

TEST(threshold, closed_form_reference_values) {
    ClosedFormResult c = closed_form_threshold(reference_params());
    EXPECT_TRUE(c.x_valid);
    EXPECT_TRUE(c.y_valid);
    EXPECT_LT(rel(c.x, 1.054290e-4), 1e-5);
    EXPECT_LT(rel(c.y, 9.490750e-6), 1e-5);
    EXPECT_LT(rel(c.gamma_x, 3.83249e-5), 1e-5);
    EXPECT_LT(rel(c.gamma_y, 3.37785e-5), 1e-5);
    EXPECT_EQ(c.gamma_min, c.gamma_y);
}

TEST(threshold, closed_form_scaling_and_flags) {
    TwoDimParams p = reference_params();
    ClosedFormResult c = closed_form_threshold(p);
    ClosedFormResult k = closed_form_threshold(p.scaled_map(4));
    EXPECT_LT(rel(k.x * 4, c.x), 1e-12);
    EXPECT_LT(rel(k.y * 4, c.y), 1e-12);
    TwoDimParams bad = p;
    bad.f = 1e6;
    ClosedFormResult b = closed_form_threshold(bad);
    EXPECT_FALSE(b.x_valid);
    EXPECT_TRUE(std::isnan(b.gamma_x));
}

TEST(threshold, caps) {
    EXPECT_LT(rel(pair_cap(13245), 7.551e-5), 1e-3);
    EXPECT_LT(rel(triple_cap(1225), 5.72e-5), 1e-2);
    EXPECT_EQ(pair_cap(1), 1);
    EXPECT_THROW(pair_cap(0), std::invalid_argument);
    EXPECT_THROW(triple_cap(2), std::invalid_argument);
}

TEST(threshold, theta_injection) {
    ThetaResult r = theta_injection(1e-4, 1e-6);
    EXPECT_NEAR(r.injected, 1.1e-4, 1e-18);
    EXPECT_NEAR(r.recursion_threshold, 1.0 / 3486, 1e-18);
    EXPECT_THROW(theta_injection(2, 0), std::invalid_argument);
}
