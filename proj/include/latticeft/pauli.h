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

#ifndef _LATTICEFT_PAULI_H
#define _LATTICEFT_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace latticeft {

/// An unsigned n-qubit Pauli operator stored as paired X and Z bit vectors.
///
/// Signs are discarded; composition is componentwise XOR.
struct PauliMask {
    size_t num_qubits = 0;
    std::vector<uint64_t> xs;
    std::vector<uint64_t> zs;

    PauliMask() = default;
    explicit PauliMask(size_t num_qubits);

    /// Parses a dense string such as "IXYZ" (qubit 0 first).
    static PauliMask from_str(const std::string &text);
    /// Single-qubit Pauli ('X', 'Y' or 'Z') on qubit q of an n-qubit register.
    static PauliMask single(size_t num_qubits, size_t q, char pauli);

    bool x(size_t q) const;
    bool z(size_t q) const;
    void set_x(size_t q, bool value);
    void set_z(size_t q, bool value);
    void flip_x(size_t q);
    void flip_z(size_t q);

    /// Returns 'I', 'X', 'Y' or 'Z'.
    char at(size_t q) const;

    bool is_identity() const;
    size_t weight() const;
    size_t x_weight() const;
    size_t z_weight() const;

    /// True iff the two operators commute (symplectic product is zero).
    bool commutes(const PauliMask &other) const;

    PauliMask &operator*=(const PauliMask &other);
    PauliMask operator*(const PauliMask &other) const;
    bool operator==(const PauliMask &other) const;
    bool operator!=(const PauliMask &other) const;

    std::string str() const;
};

}  // namespace latticeft

#endif
