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


#include "latticeft/pauli.h"

#include <array>
#include <complex>

#include "gtest/gtest.h"
#include "latticeft/gates.h"

using namespace latticeft;

namespace {

using C = std::complex<double>;
using Mat4 = std::array<std::array<C, 4>, 4>;

Mat4 mul(const Mat4 &a, const Mat4 &b) {
    Mat4 r{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            for (int k = 0; k < 4; k++) {
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

Mat4 dagger(const Mat4 &a) {
    Mat4 r{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            r[i][j] = std::conj(a[j][i]);
        }
    }
    return r;
}

using Mat2 = std::array<std::array<C, 2>, 2>;

Mat2 pauli_matrix(char p) {
    const C i(0, 1);
    switch (p) {
        case 'X':
            return {{{0, 1}, {1, 0}}};
        case 'Y':
            return {{{0, -i}, {i, 0}}};
        case 'Z':
            return {{{1, 0}, {0, -1}}};
        default:
            return {{{1, 0}, {0, 1}}};
    }
}

/// Qubit a is the high bit of the basis index.
Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 r{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            r[i][j] = a[i >> 1][j >> 1] * b[i & 1][j & 1];
        }
    }
    return r;
}

Mat4 permutation(int (*f)(int)) {
    Mat4 r{};
    for (int k = 0; k < 4; k++) {
        r[f(k)][k] = 1;
    }
    return r;
}

Mat4 unitary(GateKind kind) {
    Mat4 cnot = permutation([](int k) { return (k & 2) ? k ^ 1 : k; });
    Mat4 swap = permutation([](int k) { return ((k & 1) << 1) | ((k >> 1) & 1); });
    Mat4 cz{};
    for (int k = 0; k < 4; k++) {
        cz[k][k] = k == 3 ? -1 : 1;
    }
    const double s = 1 / std::sqrt(2.0);
    Mat2 h = {{{s, s}, {s, -s}}};
    switch (kind) {
        case GateKind::CNOT:
            return cnot;
        case GateKind::CZ:
            return cz;
        case GateKind::SWAP:
            return swap;
        case GateKind::CNOT_SWAP:
            return mul(swap, cnot);
        case GateKind::CZ_SWAP:
            return mul(swap, cz);
        case GateKind::H:
            return kron(h, pauli_matrix('I'));
        default:
            return kron(pauli_matrix('I'), pauli_matrix('I'));
    }
}

/// Finds the two-qubit Pauli equal to m up to a phase.
std::string identify(const Mat4 &m) {
    const char *ps = "IXYZ";
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            Mat4 p = kron(pauli_matrix(ps[a]), pauli_matrix(ps[b]));
            C overlap = 0;
            for (int i = 0; i < 4; i++) {
                for (int j = 0; j < 4; j++) {
                    overlap += std::conj(p[i][j]) * m[i][j];
                }
            }
            if (std::abs(std::abs(overlap) - 4) < 1e-9) {
                return {ps[a], ps[b]};
            }
        }
    }
    return "??";
}

}  // namespace

TEST(pauli, from_str_and_str) {
    PauliMask p = PauliMask::from_str("IXYZ");
    EXPECT_EQ(p.num_qubits, 4u);
    EXPECT_EQ(p.at(0), 'I');
    EXPECT_EQ(p.at(1), 'X');
    EXPECT_EQ(p.at(2), 'Y');
    EXPECT_EQ(p.at(3), 'Z');
    EXPECT_EQ(p.str(), "IXYZ");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.x_weight(), 2u);
    EXPECT_EQ(p.z_weight(), 2u);
}

TEST(pauli, product_and_commutation) {
    PauliMask x = PauliMask::from_str("XI");
    PauliMask z = PauliMask::from_str("ZI");
    EXPECT_FALSE(x.commutes(z));
    EXPECT_TRUE(PauliMask::from_str("XX").commutes(PauliMask::from_str("ZZ")));
    EXPECT_EQ((x * z).str(), "YI");
    EXPECT_TRUE((x * x).is_identity());
}

TEST(pauli, wide_registers) {
    PauliMask p(130);
    p.set_x(129, true);
    p.set_z(64, true);
    EXPECT_EQ(p.weight(), 2u);
    EXPECT_EQ(PauliMask::single(130, 129, 'X'), PauliMask::single(130, 129, 'X'));
    EXPECT_FALSE(p.commutes(PauliMask::single(130, 64, 'X')));
}

TEST(gates, conjugation_matches_matrix_oracle) {
    const char *ps = "IXYZ";
    for (GateKind kind : {GateKind::CNOT, GateKind::CZ, GateKind::SWAP, GateKind::CNOT_SWAP, GateKind::CZ_SWAP,
                          GateKind::H}) {
        Mat4 u = unitary(kind);
        for (int a = 0; a < 4; a++) {
            for (int b = 0; b < 4; b++) {
                std::string in = {ps[a], ps[b]};
                std::string expected = identify(mul(mul(u, kron(pauli_matrix(ps[a]), pauli_matrix(ps[b]))), dagger(u)));
                PauliMask p = PauliMask::from_str(in);
                PauliMask out = gate_arity(kind) == 2 ? conjugate(kind, 0, 1, p) : conjugate(kind, 0, p);
                EXPECT_EQ(out.str(), expected) << gate_name(kind) << " on " << in;
            }
        }
    }
}

TEST(gates, conjugate_bits_agrees_with_masks) {
    for (GateKind kind : {GateKind::CNOT, GateKind::CZ, GateKind::SWAP, GateKind::CNOT_SWAP, GateKind::CZ_SWAP}) {
        for (int bits = 0; bits < 16; bits++) {
            uint8_t xa = bits & 1, za = (bits >> 1) & 1, xb = (bits >> 2) & 1, zb = (bits >> 3) & 1;
            PauliMask p(2);
            p.set_x(0, xa);
            p.set_z(0, za);
            p.set_x(1, xb);
            p.set_z(1, zb);
            conjugate_bits(kind, xa, za, xb, zb);
            PauliMask q = conjugate(kind, 0, 1, p);
            EXPECT_EQ(q.x(0), xa != 0);
            EXPECT_EQ(q.z(0), za != 0);
            EXPECT_EQ(q.x(1), xb != 0);
            EXPECT_EQ(q.z(1), zb != 0);
        }
    }
}
