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

#include <bit>
#include <stdexcept>

namespace latticeft {

namespace {

size_t num_words(size_t n) {
    return (n + 63) / 64;
}

}  // namespace

PauliMask::PauliMask(size_t n) : num_qubits(n), xs(num_words(n), 0), zs(num_words(n), 0) {
}

PauliMask PauliMask::from_str(const std::string &text) {
    PauliMask p(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.set_x(q, true);
                break;
            case 'Z':
                p.set_z(q, true);
                break;
            case 'Y':
                p.set_x(q, true);
                p.set_z(q, true);
                break;
            default:
                throw std::invalid_argument("bad Pauli character in '" + text + "'");
        }
    }
    return p;
}

PauliMask PauliMask::single(size_t n, size_t q, char pauli) {
    if (q >= n) {
        throw std::out_of_range("qubit index out of range");
    }
    PauliMask p(n);
    if (pauli == 'X' || pauli == 'Y') {
        p.set_x(q, true);
    }
    if (pauli == 'Z' || pauli == 'Y') {
        p.set_z(q, true);
    }
    return p;
}

bool PauliMask::x(size_t q) const {
    return (xs[q >> 6] >> (q & 63)) & 1;
}

bool PauliMask::z(size_t q) const {
    return (zs[q >> 6] >> (q & 63)) & 1;
}

void PauliMask::set_x(size_t q, bool value) {
    uint64_t m = uint64_t{1} << (q & 63);
    xs[q >> 6] = value ? (xs[q >> 6] | m) : (xs[q >> 6] & ~m);
}

void PauliMask::set_z(size_t q, bool value) {
    uint64_t m = uint64_t{1} << (q & 63);
    zs[q >> 6] = value ? (zs[q >> 6] | m) : (zs[q >> 6] & ~m);
}

void PauliMask::flip_x(size_t q) {
    xs[q >> 6] ^= uint64_t{1} << (q & 63);
}

void PauliMask::flip_z(size_t q) {
    zs[q >> 6] ^= uint64_t{1} << (q & 63);
}

char PauliMask::at(size_t q) const {
    return "IXZY"[x(q) + 2 * z(q)];
}

bool PauliMask::is_identity() const {
    for (size_t k = 0; k < xs.size(); k++) {
        if (xs[k] | zs[k]) {
            return false;
        }
    }
    return true;
}

size_t PauliMask::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        w += std::popcount(xs[k] | zs[k]);
    }
    return w;
}

size_t PauliMask::x_weight() const {
    size_t w = 0;
    for (uint64_t v : xs) {
        w += std::popcount(v);
    }
    return w;
}

size_t PauliMask::z_weight() const {
    size_t w = 0;
    for (uint64_t v : zs) {
        w += std::popcount(v);
    }
    return w;
}

bool PauliMask::commutes(const PauliMask &other) const {
    if (other.num_qubits != num_qubits) {
        throw std::invalid_argument("Pauli length mismatch");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        acc ^= (xs[k] & other.zs[k]) ^ (zs[k] & other.xs[k]);
    }
    return (std::popcount(acc) & 1) == 0;
}

PauliMask &PauliMask::operator*=(const PauliMask &other) {
    if (other.num_qubits != num_qubits) {
        throw std::invalid_argument("Pauli length mismatch");
    }
    for (size_t k = 0; k < xs.size(); k++) {
        xs[k] ^= other.xs[k];
        zs[k] ^= other.zs[k];
    }
    return *this;
}

PauliMask PauliMask::operator*(const PauliMask &other) const {
    PauliMask r = *this;
    r *= other;
    return r;
}

bool PauliMask::operator==(const PauliMask &other) const {
    return num_qubits == other.num_qubits && xs == other.xs && zs == other.zs;
}

bool PauliMask::operator!=(const PauliMask &other) const {
    return !(*this == other);
}

std::string PauliMask::str() const {
    std::string s;
    for (size_t q = 0; q < num_qubits; q++) {
        s.push_back(at(q));
    }
    return s;
}

}  // namespace latticeft
