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


#include "latticeft/simd.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"

using namespace latticeft;

namespace {

std::vector<uint64_t> random_words(std::mt19937_64 &rng, size_t n) {
    std::vector<uint64_t> v(n);
    for (auto &w : v) {
        w = rng();
    }
    return v;
}

std::vector<const simd::Kernels *> all_kernels() {
    std::vector<const simd::Kernels *> ks = {&simd::scalar_kernels()};
    if (simd::avx2_kernels() != nullptr && simd::cpu_has_avx2()) {
        ks.push_back(simd::avx2_kernels());
    }
    return ks;
}

}  // namespace

TEST(simd, round_up_words) {
    EXPECT_EQ(simd::round_up_words(0), 0u);
    EXPECT_EQ(simd::round_up_words(1), simd::WORDS_PER_LANE);
    EXPECT_EQ(simd::round_up_words(64 * simd::WORDS_PER_LANE), simd::WORDS_PER_LANE);
    EXPECT_EQ(simd::round_up_words(64 * simd::WORDS_PER_LANE + 1), 2 * simd::WORDS_PER_LANE);
}

TEST(simd, active_kernels_are_listed) {
    const simd::Kernels &a = simd::active_kernels();
    bool found = false;
    for (const auto *k : all_kernels()) {
        found = found || k == &a;
    }
    EXPECT_TRUE(found) << a.name;
}

TEST(simd, kernels_agree_with_scalar) {
    std::mt19937_64 rng(7);
    const simd::Kernels &ref = simd::scalar_kernels();
    for (const auto *k : all_kernels()) {
        for (size_t lanes = 1; lanes <= 9; lanes++) {
            size_t n = lanes * simd::WORDS_PER_LANE;
            auto a = random_words(rng, n), b = random_words(rng, n), c = random_words(rng, n);

            std::vector<uint64_t> d1 = a, d2 = a;
            ref.xor_into(d1.data(), b.data(), n);
            k->xor_into(d2.data(), b.data(), n);
            EXPECT_EQ(d1, d2) << k->name;

            std::vector<uint64_t> e1(n), e2(n);
            ref.xor_to(e1.data(), a.data(), b.data(), n);
            k->xor_to(e2.data(), a.data(), b.data(), n);
            EXPECT_EQ(e1, e2) << k->name;

            ref.xor3_to(e1.data(), a.data(), b.data(), c.data(), n);
            k->xor3_to(e2.data(), a.data(), b.data(), c.data(), n);
            EXPECT_EQ(e1, e2) << k->name;
            for (size_t i = 0; i < n; i++) {
                ASSERT_EQ(e1[i], a[i] ^ b[i] ^ c[i]);
            }

            std::vector<uint64_t> z(n, 0);
            EXPECT_TRUE(k->is_zero(z.data(), n));
            z[n - 1] = 1;
            EXPECT_FALSE(k->is_zero(z.data(), n));
            EXPECT_EQ(ref.is_zero(a.data(), n), k->is_zero(a.data(), n));
        }
    }
}
