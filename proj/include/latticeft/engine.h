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

#ifndef _LATTICEFT_ENGINE_H
#define _LATTICEFT_ENGINE_H

#include <climits>
#include <cstdint>
#include <vector>

#include "latticeft/pauli.h"
#include "latticeft/program.h"

namespace latticeft {

/// One faulty site. `pauli` uses the codes of fault_alphabet.
struct Fault {
    int site;
    uint8_t pauli;
};
using FaultAssignment = std::vector<Fault>;

/// A Pauli placed on the frame of one qubit between two steps.
struct InputError {
    int qubit;
    uint8_t x;
    uint8_t z;
};

struct SimOptions {
    std::vector<InputError> input;
    /// The input errors are applied after this step (before everything by default).
    int input_after_step = INT_MIN;
    /// If set, sites with site_enabled[s] == 0 are skipped entirely.
    const std::vector<uint8_t> *site_enabled = nullptr;
};

struct SimOutcome {
    /// Residual frame of each output block (7 qubits each, in code order).
    std::vector<PauliMask> output_frames;
    /// For measurement outputs: bit k is the outcome flip of code qubit k.
    std::vector<uint8_t> output_meas;
    /// Per branchpoint: -1 not evaluated, 1 pass, 0 fail.
    std::vector<int8_t> branch;
    /// Outcome flip per site (-1 if the site is not a measurement or was not executed).
    std::vector<int8_t> meas_flip;
    /// Frame of every qubit at the end.
    std::vector<uint8_t> frame_x;
    std::vector<uint8_t> frame_z;
    bool ec_failure = false;
};

/// Forward Pauli-frame simulation with branch resolution and frame recovery.
///
/// Throws std::out_of_range for faults on nonexistent sites.
SimOutcome simulate(const Program &p, const FaultAssignment &fa, const SimOptions &opts = {});

enum class Verdict : uint8_t { BENIGN, MALIGNANT, EC_FAILURE };
const char *verdict_name(Verdict v);

/// Decodes every output block of a finished simulation.
Verdict judge(const Program &p, const SimOutcome &out);
Verdict is_malignant(const Program &p, const FaultAssignment &fa);

/// True iff the given EC failed under the branch outcomes (unevaluated = pass).
bool ec_failed(const EcDecl &e, const std::vector<int8_t> &branch);

/// Whether one output block is decoded to the wrong logical value.
bool output_wrong(OutputKind kind, uint8_t x_bits, uint8_t z_bits);

}  // namespace latticeft

#endif
