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

#ifndef _LATTICEFT_CIRCUIT_H
#define _LATTICEFT_CIRCUIT_H

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "latticeft/gates.h"

namespace latticeft {

constexpr int NUM_LOCATION_TYPES = 17;

enum class Category : uint8_t { TWO_QUBIT_GATE, ONE_QUBIT_GATE, SWAP, PREP, MEAS, WAIT };
enum class Orientation : uint8_t { HORIZONTAL, VERTICAL, NONE };

struct LocationType {
    int index;
    const char *name;
    int arity;
    Orientation orientation;
    Category category;
    GateKind gate;
    /// 'X' or 'Z' for preparations and measurements, 0 otherwise.
    char basis;
};

const std::array<LocationType, NUM_LOCATION_TYPES> &location_types();
const LocationType &location_type(int index);

enum class Mode : uint8_t { LOCAL, NONLOCAL };
const char *mode_name(Mode m);
Mode parse_mode(const std::string &s);

enum class Region : uint8_t {
    LEADING_EC_A,
    LEADING_EC_B,
    GA,
    TRAILING_EC_A,
    TRAILING_EC_B,
    PREP_ATTEMPT_1,
    PREP_ATTEMPT_2,
    PREP_ATTEMPT_3,
};
constexpr int NUM_REGIONS = 8;
const char *region_name(Region r);
Region parse_region(const std::string &s);

enum class Role : uint8_t { DATA, ANCILLA, VERIFICATION, DUMMY };
const char *role_name(Role r);

/// Local mode: global lattice (row, col); cell (R, C) spans rows 6R..6R+5 and
/// cols 8C..8C+7. Nonlocal mode: (block, index).
struct QubitAddress {
    int a = 0;
    int b = 0;
    auto operator<=>(const QubitAddress &) const = default;
};
std::string address_str(const QubitAddress &q);

struct BranchCond {
    int branchpoint;
    bool pass;
    bool operator==(const BranchCond &) const = default;
};

struct Location {
    int type = 0;
    int step = 0;
    uint8_t num_qubits = 1;
    std::array<QubitAddress, 2> qubits{};
    Region region = Region::GA;
    /// Conjunction of branch outcomes under which this line executes.
    std::vector<BranchCond> conds;
};

/// Verification parity check. The three qubits are X-measured at `step`; the
/// branch fails iff the parity of the outcomes is odd.
struct Branchpoint {
    std::string name;
    std::array<QubitAddress, 3> qubits{};
    int step = 0;
};

/// Syndrome decode of seven X-measured ancilla qubits. The decoded single-qubit
/// correction of kind `correct` is applied to the Pauli frame of `data` after
/// `step`.
struct SyndromeDecl {
    std::string name;
    char correct = 'X';
    int step = 0;
    std::array<QubitAddress, 7> anc{};
    std::array<QubitAddress, 7> data{};
    std::vector<BranchCond> conds;
};

/// An EC with attempts bp[0..2] fails iff bp0 and bp1 fail, or either of them
/// fails and bp2 also fails. Unevaluated branchpoints count as passing.
struct EcDecl {
    std::string name;
    std::array<int, 3> bps{};
};

enum class OutputKind : uint8_t { ANY, ZERO, PLUS, XMEAS, ZMEAS };
const char *output_kind_name(OutputKind k);

struct OutputDecl {
    OutputKind kind = OutputKind::ANY;
    /// Measurement step for XMEAS / ZMEAS.
    int step = 0;
    std::array<QubitAddress, 7> qubits{};
};

enum class DirectiveKind : uint8_t { BRANCHPOINT, SYNDROME, EC, OUTPUT };

struct Circuit {
    Mode mode = Mode::LOCAL;
    std::vector<std::string> comments;
    int exrec = -1;
    std::vector<std::pair<QubitAddress, Role>> roles;
    std::vector<Branchpoint> branchpoints;
    std::vector<SyndromeDecl> syndromes;
    std::vector<EcDecl> ecs;
    std::vector<OutputDecl> outputs;
    std::vector<std::pair<DirectiveKind, int>> directive_order;
    std::vector<Location> locations;

    int branchpoint_index(const std::string &name) const;
    int min_step() const;
    int max_step() const;
};

struct NetlistError : std::runtime_error {
    int line;
    NetlistError(int line, const std::string &msg);
};

/// Parses and validates. Throws NetlistError.
Circuit parse_netlist(const std::string &text);
/// Parses without the structural checks of validate_circuit.
Circuit parse_netlist_unchecked(const std::string &text);
std::string serialize_netlist(const Circuit &c);

Circuit read_netlist_file(const std::string &path);

/// Geometry, double booking and dummy-partner checks on every branch path.
/// Throws NetlistError naming the offending line (1-based among locations,
/// 0 if not tied to a line).
void validate_circuit(const Circuit &c);

/// One assignment of the branchpoints that gate locations or syndromes.
struct BranchPath {
    /// Value per branchpoint: 1 pass, 0 fail, for branchpoints that gate
    /// something; others are 1.
    std::vector<uint8_t> pass;
    std::vector<bool> active_lines;
};

struct PathSet {
    /// Branchpoints referenced by a condition, in step order.
    std::vector<int> structural;
    std::vector<BranchPath> paths;
    /// Maps an assignment of `structural` (bit k = pass of structural[k]) to a path.
    std::vector<int> path_of_assignment;
};

bool conds_hold(const std::vector<BranchCond> &conds, const std::vector<uint8_t> &pass);
PathSet enumerate_paths(const Circuit &c);

/// A physical location. Lines that differ only in their branch condition are
/// alternative schedules of the same location and are merged.
struct Site {
    int type;
    int step;
    uint8_t num_qubits;
    std::array<QubitAddress, 2> qubits;
    Region region;
    std::vector<int> lines;
};
std::vector<Site> merge_sites(const Circuit &c);

using RegionSet = std::set<Region>;
RegionSet all_regions();
RegionSet parse_region_set(const std::string &comma_separated);

/// Branch assignment with every branchpoint passing.
std::vector<uint8_t> pass_assignment(const Circuit &c);
/// Branch assignment where the first verification attempt of every EC fails.
std::vector<uint8_t> first_attempt_fail_assignment(const Circuit &c);

/// Per-type counts of the sites active under `pass` in the given regions.
std::array<int, NUM_LOCATION_TYPES> count_locations(
    const Circuit &c, const RegionSet &regions, const std::vector<uint8_t> &pass);

/// max step - min step + 1 over lines in `regions`. Throws if none match.
int duration(const Circuit &c, const RegionSet &regions);

}  // namespace latticeft

#endif
