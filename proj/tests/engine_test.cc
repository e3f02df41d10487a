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


#include "latticeft/engine.h"

#include "gtest/gtest.h"

using namespace latticeft;

namespace {

Program bitflip() {
    return compile(read_netlist_file(std::string(LATTICEFT_TEST_DATA) + "/bitflip_exrec.net"));
}

int find_site(const Program &p, int type, int step, QubitAddress q) {
    for (size_t s = 0; s < p.num_sites(); s++) {
        const Site &site = p.sites[s];
        if (site.type == type && site.step == step && site.qubits[0] == q) {
            return static_cast<int>(s);
        }
    }
    return -1;
}

}  // namespace

TEST(engine, ec_failure_rule) {
    EcDecl e{"E", {0, 1, 2}};
    auto failed = [&](int8_t a, int8_t b, int8_t c) { return ec_failed(e, {a, b, c}); };
    EXPECT_FALSE(failed(1, 1, -1));
    EXPECT_FALSE(failed(0, 1, 1));
    EXPECT_FALSE(failed(1, 0, 1));
    EXPECT_TRUE(failed(0, 0, -1));
    EXPECT_TRUE(failed(0, 1, 0));
    EXPECT_TRUE(failed(1, 0, 0));
    EXPECT_FALSE(failed(1, 1, 0));
}

TEST(engine, output_judgement) {
    // Bits 0 and 1: the decoder flips a third qubit and leaves a logical operator.
    uint8_t two = 0b0000011, one = 0b0000100;
    EXPECT_TRUE(output_wrong(OutputKind::ANY, two, 0));
    EXPECT_TRUE(output_wrong(OutputKind::ANY, 0, two));
    EXPECT_TRUE(output_wrong(OutputKind::ZERO, two, 0));
    EXPECT_FALSE(output_wrong(OutputKind::ZERO, 0, two));
    EXPECT_TRUE(output_wrong(OutputKind::PLUS, 0, two));
    EXPECT_FALSE(output_wrong(OutputKind::PLUS, two, 0));
    EXPECT_FALSE(output_wrong(OutputKind::ANY, one, one));
    EXPECT_TRUE(output_wrong(OutputKind::ANY, 0x7F, 0));
}

TEST(engine, fault_free_run_is_clean) {
    Program p = bitflip();
    SimOutcome out = simulate(p, {});
    ASSERT_EQ(out.output_frames.size(), 1u);
    EXPECT_TRUE(out.output_frames[0].is_identity());
    EXPECT_FALSE(out.ec_failure);
    EXPECT_EQ(judge(p, out), Verdict::BENIGN);
}

TEST(engine, single_wait_fault_is_corrected) {
    Program p = bitflip();
    for (int k = 0; k < 7; k++) {
        int s = find_site(p, 15, 5, {0, k});
        ASSERT_GE(s, 0);
        SimOutcome out = simulate(p, {{s, 1}});
        EXPECT_TRUE(out.output_frames[0].is_identity()) << k;
        // A Z fault is invisible to the X-only checks and ends up in the output frame.
        SimOutcome outz = simulate(p, {{s, 2}});
        EXPECT_TRUE(outz.output_frames[0].z(k));
        EXPECT_EQ(judge(p, outz), Verdict::BENIGN);
    }
}

TEST(engine, two_wait_faults_are_malignant) {
    Program p = bitflip();
    int a = find_site(p, 15, 5, {0, 0});
    int b = find_site(p, 15, 5, {0, 3});
    EXPECT_EQ(is_malignant(p, {{a, 1}, {b, 1}}), Verdict::MALIGNANT);
    EXPECT_EQ(is_malignant(p, {{a, 2}, {b, 2}}), Verdict::BENIGN);
}

TEST(engine, measurement_fault_flips_one_outcome) {
    Program p = bitflip();
    int s = find_site(p, 13, 4, {1, 2});
    ASSERT_GE(s, 0);
    SimOutcome out = simulate(p, {{s, 1}});
    EXPECT_EQ(out.meas_flip[s], 1);
    // The leading syndrome wrongly flips data qubit 2; the trailing EC repairs it.
    EXPECT_TRUE(out.output_frames[0].is_identity());
    EXPECT_EQ(judge(p, out), Verdict::BENIGN);
}

TEST(engine, input_errors_are_corrected_by_leading_ec) {
    Program p = bitflip();
    SimOptions opts;
    opts.input.push_back({p.qubit({0, 4}), 1, 0});
    SimOutcome out = simulate(p, {}, opts);
    EXPECT_TRUE(out.output_frames[0].is_identity());
}

TEST(engine, rejects_fault_on_missing_site) {
    Program p = bitflip();
    EXPECT_THROW(simulate(p, {{static_cast<int>(p.num_sites()), 1}}), std::out_of_range);
}

TEST(engine, fault_alphabets) {
    EXPECT_EQ(fault_alphabet(0).size(), 15u);
    EXPECT_EQ(fault_alphabet(9).size(), 15u);
    EXPECT_EQ(fault_alphabet(8).size(), 3u);
    EXPECT_EQ(fault_alphabet(15).size(), 3u);
    EXPECT_EQ(fault_alphabet(11), std::vector<uint8_t>{2});
    EXPECT_EQ(fault_alphabet(12), std::vector<uint8_t>{1});
    EXPECT_EQ(fault_alphabet(13), std::vector<uint8_t>{1});
}
