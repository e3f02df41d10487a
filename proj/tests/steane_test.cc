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


#include "latticeft/steane.h"

#include "gtest/gtest.h"

using namespace latticeft;

TEST(steane, generators_commute_and_logicals_anticommute) {
    const CodeDefinition &code = CodeDefinition::steane();
    ASSERT_EQ(code.stabilizers.size(), 6u);
    for (const auto &s : code.stabilizers) {
        for (const auto &t : code.stabilizers) {
            EXPECT_TRUE(s.commutes(t));
        }
        EXPECT_TRUE(s.commutes(code.logical_x));
        EXPECT_TRUE(s.commutes(code.logical_z));
        EXPECT_EQ(syndrome(code, s), 0u);
    }
    EXPECT_FALSE(code.logical_x.commutes(code.logical_z));
}

TEST(steane, exhaustive_decode_of_all_paulis) {
    const CodeDefinition &code = CodeDefinition::steane();
    int count = 0;
    for (int xs = 0; xs < 128; xs++) {
        for (int zs = 0; zs < 128; zs++) {
            PauliMask p(7);
            for (int q = 0; q < 7; q++) {
                p.set_x(q, (xs >> q) & 1);
                p.set_z(q, (zs >> q) & 1);
            }
            DecodeResult d = ideal_decode(code, p);
            EXPECT_LE(d.correction.x_weight(), 1u);
            EXPECT_LE(d.correction.z_weight(), 1u);
            PauliMask residual = p * d.correction;
            ASSERT_EQ(syndrome(code, residual), 0u);
            // The residual is a stabilizer times the reported logical class.
            bool x_logical = residual.x_weight() % 2 == 1;
            bool z_logical = residual.z_weight() % 2 == 1;
            LogicalClass expected = LogicalClass(int(x_logical) | (int(z_logical) << 1));
            EXPECT_EQ(d.logical_class, expected);
            count++;
        }
    }
    EXPECT_EQ(count, 16384);
}

TEST(steane, logical_operator_classes) {
    const CodeDefinition &code = CodeDefinition::steane();
    EXPECT_EQ(ideal_decode(code, code.logical_x).logical_class, LogicalClass::X);
    EXPECT_EQ(ideal_decode(code, code.logical_z).logical_class, LogicalClass::Z);
    EXPECT_EQ(ideal_decode(code, code.logical_x * code.logical_z).logical_class, LogicalClass::Y);
    EXPECT_EQ(ideal_decode(code, PauliMask(7)).logical_class, LogicalClass::I);
    EXPECT_EQ(logical_class_char(LogicalClass::Y), 'Y');
}

TEST(steane, single_errors_are_corrected) {
    const CodeDefinition &code = CodeDefinition::steane();
    for (int q = 0; q < 7; q++) {
        for (char c : {'X', 'Y', 'Z'}) {
            PauliMask p = PauliMask::single(7, q, c);
            DecodeResult d = ideal_decode(code, p);
            EXPECT_EQ(d.correction, p);
            EXPECT_EQ(d.logical_class, LogicalClass::I);
        }
    }
}

TEST(steane, decode_table_matches_decoder) {
    const CodeDefinition &code = CodeDefinition::steane();
    const auto &table = steane_decode_table();
    for (int bits = 0; bits < 128; bits++) {
        PauliMask p(7);
        for (int q = 0; q < 7; q++) {
            p.set_x(q, (bits >> q) & 1);
        }
        DecodeResult d = ideal_decode(code, p);
        int flip = -1;
        for (int q = 0; q < 7; q++) {
            if (d.correction.x(q)) {
                flip = q;
            }
        }
        EXPECT_EQ(table[bits].flip_qubit, flip);
        EXPECT_EQ(table[bits].logical, d.logical_class == LogicalClass::X ? 1 : 0);
    }
}
