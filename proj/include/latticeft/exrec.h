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

#ifndef _LATTICEFT_EXREC_H
#define _LATTICEFT_EXREC_H

#include <array>
#include <string>
#include <vector>

#include "latticeft/census.h"
#include "latticeft/engine.h"

namespace latticeft {

/// Directory holding the shipped netlists.
std::string default_fixtures_dir();

/// `<dir>/<stem>_<mode>.net`
std::string netlist_path(const std::string &dir, const std::string &stem, Mode mode);

/// Number of trailing 1-ECs of the exRec of a location type.
int trailing_ec_count(int type);

struct ExRec {
    int type = 0;
    Mode mode = Mode::LOCAL;
    int q = 0;
    Program program;
};

/// Loads and validates exrec_<type>_<mode>.net. Throws std::runtime_error if missing.
ExRec build_exrec(int type, Mode mode, const std::string &dir = default_fixtures_dir());

/// Loads and compiles a component netlist (g, v, gv, sx, sz, ec).
Program load_component(const std::string &stem, Mode mode, const std::string &dir = default_fixtures_dir());

/// Malignancy matrices of all 17 exRecs of a mode, indexed by location type.
std::array<MalignancyMatrix, NUM_LOCATION_TYPES> census_all(Mode mode, const CensusOptions &opts = {},
                                                            const std::string &dir = default_fixtures_dir());

/// Bad locations of the shipped G||V circuit.
BadLocationCount self_badloc(Mode mode, const std::string &dir = default_fixtures_dir());

using TypeCounts = std::array<int, NUM_LOCATION_TYPES>;

/// Location counts and durations of the shipped circuits of one mode.
struct StructureSummary {
    Mode mode = Mode::LOCAL;
    TypeCounts ec_pass{};
    TypeCounts ec_fail{};
    TypeCounts hcnot_ga{};
    int ec_duration = 0;
    /// Indexed by location type.
    std::array<int, NUM_LOCATION_TYPES> rec_duration{};
    std::array<int, NUM_LOCATION_TYPES> exrec_duration{};
    std::array<int, NUM_LOCATION_TYPES> exrec_total{};
};

StructureSummary summarize_structure(Mode mode, const std::string &dir = default_fixtures_dir());

/// Parity outcome of the verification for one injected ancilla error.
struct BlocklistEntry {
    std::string error;
    /// 1 if the verification parity flips (ancilla rejected).
    int parity;
    /// Required parity, or -1 if the entry is informational.
    int expected;
};

struct BlocklistReport {
    bool ok = true;
    /// Last encoder step; errors are injected after it.
    int inject_after = 0;
    std::vector<BlocklistEntry> entries;
};

/// Injects X errors on encoded-ancilla qubits (1-indexed code order) after
/// the encoder of a G||V circuit and reports the verification parity.
BlocklistReport verification_blocklist_check(const Program &gv, const Program &g);

/// Parity (1 = rejected) of G||V with X errors on the given 1-indexed code qubits.
int verification_parity(const Program &gv, int inject_after, const std::vector<int> &x_qubits);

/// Last step containing a non-SWAP two-qubit gate.
int encoder_end_step(const Program &g);

/// True iff the fault-free run of an encoder leaves an empty frame and the
/// output is stabilized by the code generators and logical Z.
bool encoded_zero_check(const Program &g);

struct PropertyResult {
    std::string name;
    bool ok = true;
    uint64_t cases = 0;
    uint64_t violations = 0;
    std::string first_violation;
};

/// Exhaustive single-fault by input-error sweeps of the fault-tolerance properties.
std::vector<PropertyResult> ft_sweeps(Mode mode, const std::string &dir = default_fixtures_dir());

/// Error weights of a 7-qubit residual after ideal decoding.
struct BlockError {
    /// Syndrome nonzero.
    bool x_detected;
    bool z_detected;
    /// Residual is a weight-1 error times a logical operator.
    bool x_logical;
    bool z_logical;
};
BlockError classify_block(uint8_t x_bits, uint8_t z_bits);

}  // namespace latticeft

#endif
