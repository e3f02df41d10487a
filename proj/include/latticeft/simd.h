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

#ifndef _LATTICEFT_SIMD_H
#define _LATTICEFT_SIMD_H

#include <cstddef>
#include <cstdint>

namespace latticeft::simd {

/// Word counts passed to the kernels are always multiples of 4 (256 bits).
constexpr size_t WORDS_PER_LANE = 4;

struct Kernels {
    const char *name;
    /// dst ^= src
    void (*xor_into)(uint64_t *dst, const uint64_t *src, size_t num_words);
    /// dst = a ^ b
    void (*xor_to)(uint64_t *dst, const uint64_t *a, const uint64_t *b, size_t num_words);
    /// dst = a ^ b ^ c
    void (*xor3_to)(uint64_t *dst, const uint64_t *a, const uint64_t *b, const uint64_t *c, size_t num_words);
    bool (*is_zero)(const uint64_t *a, size_t num_words);
};

const Kernels &scalar_kernels();
/// Null when the library was built without the AVX2 translation unit.
const Kernels *avx2_kernels();
bool cpu_has_avx2();

/// AVX2 when built and supported by the CPU, otherwise scalar. Setting the
/// environment variable LATTICEFT_FORCE_SCALAR=1 forces the scalar kernels.
const Kernels &active_kernels();

inline size_t round_up_words(size_t num_bits) {
    size_t w = (num_bits + 63) / 64;
    return (w + WORDS_PER_LANE - 1) / WORDS_PER_LANE * WORDS_PER_LANE;
}

}  // namespace latticeft::simd

#endif
