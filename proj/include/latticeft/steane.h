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

#ifndef _LATTICEFT_STEANE_H
#define _LATTICEFT_STEANE_H

#include <array>
#include <cstdint>
#include <vector>

#include "latticeft/pauli.h"

namespace latticeft {

struct CodeDefinition {
    size_t n = 0;
    std::vector<PauliMask> stabilizers;
    PauliMask logical_x;
    PauliMask logical_z;

    /// The [[7,1,3]] code with generators s1..s6 = IIIXXXX, IXXIIXX, XIXIXIX,
    /// IIIZZZZ, IZZIIZZ, ZIZIZIZ and logicals XXXXXXX, ZZZZZZZ.
    static const CodeDefinition &steane();
};

enum class LogicalClass : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char logical_class_char(LogicalClass c);

struct DecodeResult {
    LogicalClass logical_class = LogicalClass::I;
    PauliMask correction;
};

/// Bit k is set iff p anticommutes with generator k.
uint32_t syndrome(const CodeDefinition &code, const PauliMask &p);

/// Perfect-code decoder: weight <= 1 X correction from the Z-type checks and
/// weight <= 1 Z correction from the X-type checks.
DecodeResult ideal_decode(const CodeDefinition &code, const PauliMask &p);

/// Classical table for one 7-bit error pattern of the Steane code.
///
/// Bit j of the pattern is qubit j (0-indexed). `flip_qubit` is the qubit
/// the decoder flips (-1 for none) and `logical` is the parity of the
/// corrected pattern, which is the logical flip under XXXXXXX or ZZZZZZZ.
struct Decode7 {
    int8_t flip_qubit;
    uint8_t logical;
};

/// 128-entry lookup built from ideal_decode.
const std::array<Decode7, 128> &steane_decode_table();

}  // namespace latticeft

#endif
