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

#ifndef _LATTICEFT_GATES_H
#define _LATTICEFT_GATES_H

#include <cstddef>
#include <cstdint>
#include <utility>

#include "latticeft/pauli.h"

namespace latticeft {

enum class GateKind : uint8_t {
    IDENTITY,
    CNOT,
    CZ,
    SWAP,
    /// CNOT(a, b) followed by SWAP(a, b).
    CNOT_SWAP,
    /// CZ(a, b) followed by SWAP(a, b).
    CZ_SWAP,
    H,
};

const char *gate_name(GateKind kind);
size_t gate_arity(GateKind kind);

/// Conjugates the X/Z bits of one or two qubits in place.
///
/// (xa, za) belong to the first qubit and (xb, zb) to the second.
/// Single-qubit kinds ignore the second pair.
inline void conjugate_bits(GateKind kind, uint8_t &xa, uint8_t &za, uint8_t &xb, uint8_t &zb) {
    switch (kind) {
        case GateKind::IDENTITY:
            break;
        case GateKind::CNOT:
            xb ^= xa;
            za ^= zb;
            break;
        case GateKind::CZ:
            za ^= xb;
            zb ^= xa;
            break;
        case GateKind::SWAP:
            std::swap(xa, xb);
            std::swap(za, zb);
            break;
        case GateKind::CNOT_SWAP:
            xb ^= xa;
            za ^= zb;
            std::swap(xa, xb);
            std::swap(za, zb);
            break;
        case GateKind::CZ_SWAP:
            za ^= xb;
            zb ^= xa;
            std::swap(xa, xb);
            std::swap(za, zb);
            break;
        case GateKind::H:
            std::swap(xa, za);
            break;
    }
}

/// Image of p under conjugation by the ideal gate on qubits a (and b).
///
/// Throws on out-of-range or repeated qubit indices.
PauliMask conjugate(GateKind kind, size_t a, size_t b, const PauliMask &p);
PauliMask conjugate(GateKind kind, size_t a, const PauliMask &p);

}  // namespace latticeft

#endif
