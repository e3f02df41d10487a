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

#include "latticeft/steane.h"

#include <stdexcept>

namespace latticeft {

const CodeDefinition &CodeDefinition::steane() {
    static const CodeDefinition code = [] {
        CodeDefinition c;
        c.n = 7;
        for (const char *s : {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}) {
            c.stabilizers.push_back(PauliMask::from_str(s));
        }
        c.logical_x = PauliMask::from_str("XXXXXXX");
        c.logical_z = PauliMask::from_str("ZZZZZZZ");
        return c;
    }();
    return code;
}

char logical_class_char(LogicalClass c) {
    return "IXZY"[static_cast<int>(c)];
}

uint32_t syndrome(const CodeDefinition &code, const PauliMask &p) {
    if (p.num_qubits != code.n) {
        throw std::invalid_argument("syndrome: Pauli length does not match the code");
    }
    uint32_t s = 0;
    for (size_t k = 0; k < code.stabilizers.size(); k++) {
        if (!code.stabilizers[k].commutes(p)) {
            s |= uint32_t{1} << k;
        }
    }
    return s;
}

DecodeResult ideal_decode(const CodeDefinition &code, const PauliMask &p) {
    uint32_t s = syndrome(code, p);
    DecodeResult r;
    r.correction = PauliMask(code.n);
    // Try every weight <= 1 X pattern against the syndrome bits of the Z-type
    // generators and every weight <= 1 Z pattern against the X-type ones.
    uint32_t z_checks = 0, x_checks = 0;
    for (size_t k = 0; k < code.stabilizers.size(); k++) {
        if (code.stabilizers[k].z_weight()) {
            z_checks |= uint32_t{1} << k;
        } else {
            x_checks |= uint32_t{1} << k;
        }
    }
    auto solve = [&](char kind, uint32_t checks) {
        uint32_t target = s & checks;
        if (target == 0) {
            return;
        }
        for (size_t q = 0; q < code.n; q++) {
            PauliMask e = PauliMask::single(code.n, q, kind);
            if ((syndrome(code, e) & checks) == target) {
                r.correction *= e;
                return;
            }
        }
        throw std::logic_error("syndrome has no weight-1 solution");
    };
    solve('X', z_checks);
    solve('Z', x_checks);
    PauliMask residual = p * r.correction;
    bool lx = !residual.commutes(code.logical_z);
    bool lz = !residual.commutes(code.logical_x);
    r.logical_class = static_cast<LogicalClass>(int(lx) + 2 * int(lz));
    return r;
}

const std::array<Decode7, 128> &steane_decode_table() {
    static const std::array<Decode7, 128> table = [] {
        std::array<Decode7, 128> t{};
        const CodeDefinition &code = CodeDefinition::steane();
        for (uint32_t m = 0; m < 128; m++) {
            PauliMask p(7);
            for (size_t q = 0; q < 7; q++) {
                p.set_x(q, (m >> q) & 1);
            }
            DecodeResult d = ideal_decode(code, p);
            int8_t flip = -1;
            for (size_t q = 0; q < 7; q++) {
                if (d.correction.x(q)) {
                    flip = static_cast<int8_t>(q);
                }
            }
            t[m] = {flip, static_cast<uint8_t>(d.logical_class == LogicalClass::X)};
        }
        return t;
    }();
    return table;
}

}  // namespace latticeft
