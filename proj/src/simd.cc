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

#include <cstdlib>
#include <cstring>

namespace latticeft::simd {

#ifdef LATTICEFT_HAVE_AVX2
const Kernels &avx2_kernels_impl();
#endif

namespace {

void scalar_xor_into(uint64_t *dst, const uint64_t *src, size_t n) {
    for (size_t k = 0; k < n; k++) {
        dst[k] ^= src[k];
    }
}

void scalar_xor_to(uint64_t *dst, const uint64_t *a, const uint64_t *b, size_t n) {
    for (size_t k = 0; k < n; k++) {
        dst[k] = a[k] ^ b[k];
    }
}

void scalar_xor3_to(uint64_t *dst, const uint64_t *a, const uint64_t *b, const uint64_t *c, size_t n) {
    for (size_t k = 0; k < n; k++) {
        dst[k] = a[k] ^ b[k] ^ c[k];
    }
}

bool scalar_is_zero(const uint64_t *a, size_t n) {
    uint64_t acc = 0;
    for (size_t k = 0; k < n; k++) {
        acc |= a[k];
    }
    return acc == 0;
}

}  // namespace

const Kernels &scalar_kernels() {
    static const Kernels k = {"scalar", scalar_xor_into, scalar_xor_to, scalar_xor3_to, scalar_is_zero};
    return k;
}

const Kernels *avx2_kernels() {
#ifdef LATTICEFT_HAVE_AVX2
    return &avx2_kernels_impl();
#else
    return nullptr;
#endif
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Kernels &active_kernels() {
    static const Kernels *chosen = [] {
        const char *force = std::getenv("LATTICEFT_FORCE_SCALAR");
        if (force != nullptr && std::strcmp(force, "1") == 0) {
            return &scalar_kernels();
        }
        if (avx2_kernels() != nullptr && cpu_has_avx2()) {
            return avx2_kernels();
        }
        return &scalar_kernels();
    }();
    return *chosen;
}

}  // namespace latticeft::simd
