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

#include "latticeft/gates.h"

#include <stdexcept>

namespace latticeft {

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::IDENTITY:
            return "I";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CZ:
            return "CZ";
        case GateKind::SWAP:
            return "SWAP";
        case GateKind::CNOT_SWAP:
            return "CNOT_SWAP";
        case GateKind::CZ_SWAP:
            return "CZ_SWAP";
        case GateKind::H:
            return "H";
    }
    throw std::invalid_argument("unknown gate kind");
}

size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::IDENTITY:
        case GateKind::H:
            return 1;
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
        case GateKind::CNOT_SWAP:
        case GateKind::CZ_SWAP:
            return 2;
    }
    throw std::invalid_argument("unknown gate kind");
}

PauliMask conjugate(GateKind kind, size_t a, size_t b, const PauliMask &p) {
    if (gate_arity(kind) != 2) {
        throw std::invalid_argument("two qubits given to a single-qubit gate");
    }
    if (a >= p.num_qubits || b >= p.num_qubits) {
        throw std::out_of_range("qubit index out of range");
    }
    if (a == b) {
        throw std::invalid_argument("gate qubits must be distinct");
    }
    uint8_t xa = p.x(a), za = p.z(a), xb = p.x(b), zb = p.z(b);
    conjugate_bits(kind, xa, za, xb, zb);
    PauliMask r = p;
    r.set_x(a, xa);
    r.set_z(a, za);
    r.set_x(b, xb);
    r.set_z(b, zb);
    return r;
}

PauliMask conjugate(GateKind kind, size_t a, const PauliMask &p) {
    if (gate_arity(kind) != 1) {
        throw std::invalid_argument("one qubit given to a two-qubit gate");
    }
    if (a >= p.num_qubits) {
        throw std::out_of_range("qubit index out of range");
    }
    uint8_t xa = p.x(a), za = p.z(a), xb = 0, zb = 0;
    conjugate_bits(kind, xa, za, xb, zb);
    PauliMask r = p;
    r.set_x(a, xa);
    r.set_z(a, za);
    return r;
}

}  // namespace latticeft
