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


#include "latticeft/census.h"

#include "gtest/gtest.h"
#include "latticeft/exrec.h"

using namespace latticeft;

namespace {

Program bitflip() {
    return compile(read_netlist_file(std::string(LATTICEFT_TEST_DATA) + "/bitflip_exrec.net"));
}

}  // namespace

TEST(census, bitflip_exrec_matches_oracle) {
    Program p = bitflip();
    MalignancyMatrix fast = census_pairs(p);
    MalignancyMatrix slow = census_pairs_oracle(p);
    EXPECT_EQ(fast, slow);
    EXPECT_EQ(fast.total(), 1323u);
    // Any two X faults on distinct waits leave a weight-2 error that decodes to a logical.
    EXPECT_EQ(fast.at(15, 15), 21u);
    EXPECT_EQ(census_single_malignant(p), 0u);
}

TEST(census, truncated_exrecs_match_oracle) {
    for (int type : {0, 9, 11, 13, 16}) {
        Program p = build_exrec(type, Mode::LOCAL).program;
        CensusOptions opts;
        opts.max_sites = 60;
        EXPECT_EQ(census_pairs(p, opts), census_pairs_oracle(p, 60)) << type;
    }
    Program p = build_exrec(0, Mode::NONLOCAL).program;
    CensusOptions opts;
    opts.max_sites = 60;
    EXPECT_EQ(census_pairs(p, opts), census_pairs_oracle(p, 60));
}

TEST(census, serial_and_parallel_runs_agree) {
    Program p = build_exrec(13, Mode::LOCAL).program;
    CensusOptions serial;
    MalignancyMatrix a = census_pairs(p, serial);
    for (int workers : {2, 3, 7}) {
        CensusOptions par;
        par.workers = workers;
        MalignancyMatrix b = census_pairs(p, par);
        EXPECT_EQ(a, b) << workers;
        EXPECT_EQ(format_matrix(a), format_matrix(b));
    }
}

TEST(census, scalar_and_simd_kernels_agree) {
    Program p = build_exrec(14, Mode::LOCAL).program;
    CensusOptions scalar;
    scalar.kernels = &simd::scalar_kernels();
    CensusOptions active;
    active.kernels = &simd::active_kernels();
    EXPECT_EQ(census_pairs(p, scalar), census_pairs(p, active));
}

TEST(census, restricting_the_alphabet_never_increases_counts) {
    Program p = build_exrec(13, Mode::LOCAL).program;
    MalignancyMatrix full = census_pairs(p);
    CensusOptions opts;
    opts.two_qubit_alphabet = {1, 4, 5};
    MalignancyMatrix x_only = census_pairs(p, opts);
    for (int i = 0; i < NUM_LOCATION_TYPES; i++) {
        for (int j = i; j < NUM_LOCATION_TYPES; j++) {
            EXPECT_LE(x_only.alpha[i][j], full.alpha[i][j]);
        }
    }
    EXPECT_LT(x_only.total(), full.total());
}

TEST(census, single_faults_never_malignant) {
    for (Mode mode : {Mode::LOCAL, Mode::NONLOCAL}) {
        for (int type = 0; type < NUM_LOCATION_TYPES; type++) {
            EXPECT_EQ(census_single_malignant(build_exrec(type, mode).program), 0u)
                << type << " " << mode_name(mode);
        }
    }
}

TEST(census, matrix_bounds_hold) {
    Program p = build_exrec(14, Mode::LOCAL).program;
    MalignancyMatrix m = census_pairs(p);
    std::array<int, NUM_LOCATION_TYPES> counts{};
    for (const Site &s : p.sites) {
        counts[s.type]++;
    }
    EXPECT_EQ(check_matrix_bounds(m, counts), "");
    m.alpha[0][0] = 1u << 30;
    EXPECT_NE(check_matrix_bounds(m, counts), "");
}

TEST(census, matrix_round_trip) {
    MalignancyMatrix m = census_pairs(bitflip());
    MalignancyMatrix back = parse_matrix(format_matrix(m));
    EXPECT_EQ(m, back);
    EXPECT_EQ(back.exrec, 15);
    EXPECT_EQ(back.mode, Mode::NONLOCAL);
}

TEST(census, matrix_parse_errors) {
    EXPECT_THROW(parse_matrix("exrec 0 mode local\n1 2 3\n"), std::runtime_error);
    EXPECT_THROW(parse_matrix("exrec 99 mode local\n"), std::runtime_error);
    EXPECT_THROW(parse_matrix("bogus\n"), std::runtime_error);
}

TEST(census, shipped_fixture_matrices) {
    MalignancyMatrix a0 = read_matrix(default_fixtures_dir() + "/alpha0_local.mat");
    EXPECT_EQ(a0.exrec, 0);
    EXPECT_EQ(a0.alpha[0][0], 60u);
    EXPECT_EQ(a0.alpha[15][15], 25240u);
    MalignancyMatrix a9 = read_matrix(default_fixtures_dir() + "/alpha9_local.mat");
    EXPECT_EQ(a9.exrec, 9);
    EXPECT_EQ(a9.alpha[9][9], 3345u);
    EXPECT_EQ(a9.alpha[16][16], 84u);
    for (int t : {2, 5, 7, 8, 14}) {
        for (int j = 0; j < NUM_LOCATION_TYPES; j++) {
            EXPECT_EQ(a0.at(t, j), 0u);
            EXPECT_EQ(a9.at(t, j), 0u);
        }
    }
}

TEST(census, scaled_matrix) {
    MalignancyMatrix m;
    m.alpha[0][0] = 3;
    m.alpha[1][4] = 7;
    MalignancyMatrix s = m.scaled(10);
    EXPECT_EQ(s.alpha[0][0], 30u);
    EXPECT_EQ(s.alpha[1][4], 70u);
    MalignancyMatrix sum = m;
    sum += m;
    EXPECT_EQ(sum.total(), 20u);
}

TEST(census, bad_location_table) {
    BadLocationCount b = read_badloc(default_fixtures_dir() + "/badloc_local.tbl");
    int total = 0;
    for (int v : b) {
        total += v;
    }
    EXPECT_EQ(total, 23);
    EXPECT_EQ(b[1], 7);
    EXPECT_EQ(parse_badloc(format_badloc(b)), b);
}

TEST(census, bad_locations_of_shipped_gv) {
    for (Mode mode : {Mode::LOCAL, Mode::NONLOCAL}) {
        BadLocationCount b = self_badloc(mode);
        int total = 0;
        for (int v : b) {
            total += v;
        }
        EXPECT_GT(total, 0);
        EXPECT_LE(total, 49);
    }
}
