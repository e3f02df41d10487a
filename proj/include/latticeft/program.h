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

#ifndef _LATTICEFT_PROGRAM_H
#define _LATTICEFT_PROGRAM_H

#include <array>
#include <map>
#include <vector>

#include "latticeft/circuit.h"

namespace latticeft {

/// A circuit lowered to dense qubit indices, merged sites and resolved
/// measurement references. Immutable after compile().
struct Program {
    Circuit circuit;
    std::vector<QubitAddress> addresses;
    std::map<QubitAddress, int> qubit_index;
    std::vector<Site> sites;
    std::vector<int> site_of_line;

    struct Op {
        int line;
        int site;
        int type;
        int step;
        int q0;
        int q1;
    };
    /// One op per netlist line, sorted by step (stable).
    std::vector<Op> ops;
    /// ops[step_begin[k]] .. ops[step_begin[k+1]] share steps[k].
    std::vector<int> steps;
    std::vector<int> step_begin;

    struct BranchInfo {
        int step;
        std::array<int, 3> meas_site;
        /// Position in paths.structural, or -1.
        int structural_pos;
    };
    std::vector<BranchInfo> branches;

    struct SyndromeInfo {
        int step;
        char correct;
        std::array<int, 7> anc_site;
        std::array<int, 7> data_qubit;
    };
    std::vector<SyndromeInfo> syndromes;

    struct OutputInfo {
        OutputKind kind;
        std::array<int, 7> qubit;
        /// For measurement outputs, the measurement site of each qubit.
        std::array<int, 7> meas_site;
    };
    std::vector<OutputInfo> outputs;

    PathSet paths;
    /// site_active[path][site]
    std::vector<std::vector<uint8_t>> site_active;
    /// syndrome_active[path][syndrome]
    std::vector<std::vector<uint8_t>> syndrome_active;

    size_t num_qubits() const {
        return addresses.size();
    }
    size_t num_sites() const {
        return sites.size();
    }
    int qubit(const QubitAddress &q) const;
    /// The measurement site on qubit q at step, or -1.
    int meas_site(const QubitAddress &q, int step) const;
};

Program compile(const Circuit &c);

/// Fault alphabet of a location type. Codes: single-qubit x=1, z=2;
/// two-qubit x0=1, z0=2, x1=4, z1=8; preparations and measurements use 1
/// for the orthogonal-state flip and outcome flip.
const std::vector<uint8_t> &fault_alphabet(int type);

}  // namespace latticeft

#endif
