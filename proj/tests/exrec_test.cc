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


#include "latticeft/exrec.h"

#include <complex>
#include <sstream>

#include "gtest/gtest.h"
#include "latticeft/steane.h"

using namespace latticeft;

namespace {

/// Dense state-vector simulation of a preparation circuit (unitary part only).
class StateVector {
   public:
    explicit StateVector(size_t n) : n_(n), amp_(size_t(1) << n, 0) {
        amp_[0] = 1;
    }

    void h(size_t q) {
        const double s = 1 / std::sqrt(2.0);
        size_t m = size_t(1) << q;
        for (size_t k = 0; k < amp_.size(); k++) {
            if (!(k & m)) {
                auto a = amp_[k], b = amp_[k | m];
                amp_[k] = s * (a + b);
                amp_[k | m] = s * (a - b);
            }
        }
    }
    void cnot(size_t c, size_t t) {
        size_t mc = size_t(1) << c, mt = size_t(1) << t;
        for (size_t k = 0; k < amp_.size(); k++) {
            if ((k & mc) && !(k & mt)) {
                std::swap(amp_[k], amp_[k | mt]);
            }
        }
    }
    void cz(size_t a, size_t b) {
        size_t m = (size_t(1) << a) | (size_t(1) << b);
        for (size_t k = 0; k < amp_.size(); k++) {
            if ((k & m) == m) {
                amp_[k] = -amp_[k];
            }
        }
    }
    void swap(size_t a, size_t b) {
        cnot(a, b);
        cnot(b, a);
        cnot(a, b);
    }

    /// <psi| P |psi> for a Hermitian Pauli with an X part on xs and a Z part on zs.
    double expectation(const std::vector<size_t> &xs, const std::vector<size_t> &zs) const {
        size_t xm = 0, zm = 0;
        for (size_t q : xs) {
            xm |= size_t(1) << q;
        }
        for (size_t q : zs) {
            zm |= size_t(1) << q;
        }
        std::complex<double> sum = 0;
        for (size_t k = 0; k < amp_.size(); k++) {
            double sign = __builtin_popcountll(k & zm) % 2 ? -1 : 1;
            sum += std::conj(amp_[k ^ xm]) * sign * amp_[k];
        }
        return sum.real();
    }

   private:
    size_t n_;
    std::vector<std::complex<double>> amp_;
};

/// Runs the encoder and returns <S> for the six code generators and logical Z.
std::vector<double> encoder_expectations(const Program &g) {
    StateVector sv(g.num_qubits());
    for (const auto &op : g.ops) {
        const LocationType &t = location_type(op.type);
        if (t.category == Category::PREP) {
            if (t.basis == 'X') {
                sv.h(op.q0);
            }
            continue;
        }
        switch (t.gate) {
            case GateKind::CNOT:
                sv.cnot(op.q0, op.q1);
                break;
            case GateKind::CNOT_SWAP:
                sv.cnot(op.q0, op.q1);
                sv.swap(op.q0, op.q1);
                break;
            case GateKind::CZ:
                sv.cz(op.q0, op.q1);
                break;
            case GateKind::CZ_SWAP:
                sv.cz(op.q0, op.q1);
                sv.swap(op.q0, op.q1);
                break;
            case GateKind::SWAP:
                sv.swap(op.q0, op.q1);
                break;
            case GateKind::H:
                sv.h(op.q0);
                break;
            default:
                break;
        }
    }
    const CodeDefinition &code = CodeDefinition::steane();
    const auto &out = g.outputs.at(0).qubit;
    std::vector<double> r;
    std::vector<PauliMask> ops = code.stabilizers;
    ops.push_back(code.logical_z);
    for (const auto &s : ops) {
        std::vector<size_t> xs, zs;
        for (int k = 0; k < 7; k++) {
            if (s.x(k)) {
                xs.push_back(out[k]);
            }
            if (s.z(k)) {
                zs.push_back(out[k]);
            }
        }
        r.push_back(sv.expectation(xs, zs));
    }
    return r;
}

bool all_plus_one(const std::vector<double> &v) {
    for (double e : v) {
        if (std::abs(e - 1) > 1e-9) {
            return false;
        }
    }
    return true;
}

/// The encoder with its first non-SWAP two-qubit gate removed.
Program without_first_cnot(Mode mode) {
    Circuit c = read_netlist_file(netlist_path(default_fixtures_dir(), "g", mode));
    for (size_t k = 0; k < c.locations.size(); k++) {
        if (location_type(c.locations[k].type).category == Category::TWO_QUBIT_GATE) {
            c.locations.erase(c.locations.begin() + k);
            break;
        }
    }
    return compile(parse_netlist_unchecked(serialize_netlist(c)));
}

}  // namespace

TEST(exrec, encoder_prepares_encoded_zero) {
    for (Mode mode : {Mode::LOCAL, Mode::NONLOCAL}) {
        Program g = load_component("g", mode);
        EXPECT_TRUE(all_plus_one(encoder_expectations(g))) << mode_name(mode);
        EXPECT_TRUE(encoded_zero_check(g)) << mode_name(mode);
    }
}

TEST(exrec, encoder_with_deleted_cnot_is_rejected) {
    for (Mode mode : {Mode::LOCAL, Mode::NONLOCAL}) {
        Program g = without_first_cnot(mode);
        EXPECT_FALSE(all_plus_one(encoder_expectations(g))) << mode_name(mode);
        EXPECT_FALSE(encoded_zero_check(g)) << mode_name(mode);
    }
}

TEST(exrec, verification_blocks_double_x_errors) {
    for (Mode mode : {Mode::LOCAL, Mode::NONLOCAL}) {
        BlocklistReport r = verification_blocklist_check(load_component("gv", mode), load_component("g", mode));
        EXPECT_TRUE(r.ok) << mode_name(mode);
        for (const auto &e : r.entries) {
            if (e.expected >= 0) {
                EXPECT_EQ(e.parity, e.expected) << e.error;
            }
        }
    }
}

TEST(exrec, trailing_ec_counts) {
    for (int t = 0; t <= 7; t++) {
        EXPECT_EQ(trailing_ec_count(t), 2);
    }
    EXPECT_EQ(trailing_ec_count(9), 1);
    EXPECT_EQ(trailing_ec_count(13), 0);
    EXPECT_EQ(trailing_ec_count(14), 0);
    EXPECT_EQ(trailing_ec_count(15), 1);
    EXPECT_EQ(trailing_ec_count(16), 1);
}

TEST(exrec, build_checks_header) {
    ExRec e = build_exrec(9, Mode::LOCAL);
    EXPECT_EQ(e.type, 9);
    EXPECT_EQ(e.q, 1);
    EXPECT_THROW(build_exrec(9, Mode::LOCAL, "/nonexistent"), std::runtime_error);
}

TEST(exrec, structure_durations) {
    StructureSummary local = summarize_structure(Mode::LOCAL);
    EXPECT_EQ(local.ec_duration, 27);
    for (int t = 0; t <= 10; t++) {
        EXPECT_EQ(local.rec_duration[t], 35) << t;
        EXPECT_EQ(local.exrec_duration[t], 61) << t;
    }
    EXPECT_EQ(local.exrec_duration[13], 27);
    EXPECT_EQ(local.exrec_duration[16], 54);
    EXPECT_EQ(local.rec_duration[16], 28);
    EXPECT_EQ(summarize_structure(Mode::NONLOCAL).ec_duration, 21);
}

TEST(exrec, classify_block) {
    BlockError clean = classify_block(0, 0);
    EXPECT_FALSE(clean.x_detected || clean.z_detected || clean.x_logical || clean.z_logical);
    BlockError one = classify_block(0b0000100, 0);
    EXPECT_TRUE(one.x_detected);
    EXPECT_FALSE(one.x_logical);
    BlockError logical = classify_block(0x7F, 0);
    EXPECT_FALSE(logical.x_detected);
    EXPECT_TRUE(logical.x_logical);
    BlockError two = classify_block(0, 0b0000011);
    EXPECT_TRUE(two.z_detected);
    EXPECT_TRUE(two.z_logical);
}

TEST(exrec, fault_tolerance_sweeps) {
    for (Mode mode : {Mode::LOCAL, Mode::NONLOCAL}) {
        for (const auto &r : ft_sweeps(mode)) {
            EXPECT_TRUE(r.ok) << mode_name(mode) << " " << r.name << ": " << r.first_violation;
            EXPECT_GT(r.cases, 0u) << r.name;
        }
    }
}
