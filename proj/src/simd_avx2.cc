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

#include <immintrin.h>

#include "latticeft/simd.h"

namespace latticeft::simd {

namespace {

void avx2_xor_into(uint64_t *dst, const uint64_t *src, size_t n) {
    for (size_t k = 0; k < n; k += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + k));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + k), _mm256_xor_si256(d, s));
    }
}

void avx2_xor_to(uint64_t *dst, const uint64_t *a, const uint64_t *b, size_t n) {
    for (size_t k = 0; k < n; k += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + k));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + k), _mm256_xor_si256(va, vb));
    }
}

void avx2_xor3_to(uint64_t *dst, const uint64_t *a, const uint64_t *b, const uint64_t *c, size_t n) {
    for (size_t k = 0; k < n; k += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + k));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + k));
        __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(c + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + k), _mm256_xor_si256(_mm256_xor_si256(va, vb), vc));
    }
}

bool avx2_is_zero(const uint64_t *a, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    for (size_t k = 0; k < n; k += 4) {
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + k)));
    }
    return _mm256_testz_si256(acc, acc) != 0;
}

}  // namespace

const Kernels &avx2_kernels_impl() {
    static const Kernels k = {"avx2", avx2_xor_into, avx2_xor_to, avx2_xor3_to, avx2_is_zero};
    return k;
}

}  // namespace latticeft::simd
