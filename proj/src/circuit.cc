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

#include "latticeft/circuit.h"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace latticeft {

const std::array<LocationType, NUM_LOCATION_TYPES> &location_types() {
    using C = Category;
    using O = Orientation;
    using G = GateKind;
    static const std::array<LocationType, NUM_LOCATION_TYPES> table = {{
        {0, "h-CNOT", 2, O::HORIZONTAL, C::TWO_QUBIT_GATE, G::CNOT, 0},
        {1, "v-CNOT", 2, O::VERTICAL, C::TWO_QUBIT_GATE, G::CNOT, 0},
        {2, "h-CZ", 2, O::HORIZONTAL, C::TWO_QUBIT_GATE, G::CZ, 0},
        {3, "v-CZ", 2, O::VERTICAL, C::TWO_QUBIT_GATE, G::CZ, 0},
        {4, "h-CNOT-SWAP", 2, O::HORIZONTAL, C::TWO_QUBIT_GATE, G::CNOT_SWAP, 0},
        {5, "v-CNOT-SWAP", 2, O::VERTICAL, C::TWO_QUBIT_GATE, G::CNOT_SWAP, 0},
        {6, "h-CZ-SWAP", 2, O::HORIZONTAL, C::TWO_QUBIT_GATE, G::CZ_SWAP, 0},
        {7, "v-CZ-SWAP", 2, O::VERTICAL, C::TWO_QUBIT_GATE, G::CZ_SWAP, 0},
        {8, "H", 1, O::NONE, C::ONE_QUBIT_GATE, G::H, 0},
        {9, "h-SWAP", 2, O::HORIZONTAL, C::SWAP, G::SWAP, 0},
        {10, "v-SWAP", 2, O::VERTICAL, C::SWAP, G::SWAP, 0},
        {11, "prep-plus", 1, O::NONE, C::PREP, G::IDENTITY, 'X'},
        {12, "prep-zero", 1, O::NONE, C::PREP, G::IDENTITY, 'Z'},
        {13, "X-meas", 1, O::NONE, C::MEAS, G::IDENTITY, 'X'},
        {14, "Z-meas", 1, O::NONE, C::MEAS, G::IDENTITY, 'Z'},
        {15, "wait-gate", 1, O::NONE, C::WAIT, G::IDENTITY, 0},
        {16, "wait-meas", 1, O::NONE, C::WAIT, G::IDENTITY, 0},
    }};
    return table;
}

const LocationType &location_type(int index) {
    if (index < 0 || index >= NUM_LOCATION_TYPES) {
        throw std::out_of_range("location type index out of range: " + std::to_string(index));
    }
    return location_types()[index];
}

const char *mode_name(Mode m) {
    return m == Mode::LOCAL ? "local" : "nonlocal";
}

Mode parse_mode(const std::string &s) {
    if (s == "local") {
        return Mode::LOCAL;
    }
    if (s == "nonlocal") {
        return Mode::NONLOCAL;
    }
    throw std::invalid_argument("unknown mode '" + s + "'");
}

namespace {

constexpr const char *REGION_NAMES[NUM_REGIONS] = {
    "leading-EC-A",
    "leading-EC-B",
    "Ga",
    "trailing-EC-A",
    "trailing-EC-B",
    "prep-attempt-1",
    "prep-attempt-2",
    "prep-attempt-3",
};

}  // namespace

const char *region_name(Region r) {
    return REGION_NAMES[static_cast<int>(r)];
}

Region parse_region(const std::string &s) {
    for (int k = 0; k < NUM_REGIONS; k++) {
        if (s == REGION_NAMES[k]) {
            return static_cast<Region>(k);
        }
    }
    throw std::invalid_argument("unknown region tag '" + s + "'");
}

const char *role_name(Role r) {
    switch (r) {
        case Role::DATA:
            return "data";
        case Role::ANCILLA:
            return "ancilla";
        case Role::VERIFICATION:
            return "verification";
        case Role::DUMMY:
            return "dummy";
    }
    return "?";
}

const char *output_kind_name(OutputKind k) {
    switch (k) {
        case OutputKind::ANY:
            return "any";
        case OutputKind::ZERO:
            return "zero";
        case OutputKind::PLUS:
            return "plus";
        case OutputKind::XMEAS:
            return "xmeas";
        case OutputKind::ZMEAS:
            return "zmeas";
    }
    return "?";
}

std::string address_str(const QubitAddress &q) {
    return "q(" + std::to_string(q.a) + "," + std::to_string(q.b) + ")";
}

NetlistError::NetlistError(int line, const std::string &msg)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {
}

int Circuit::branchpoint_index(const std::string &name) const {
    for (size_t k = 0; k < branchpoints.size(); k++) {
        if (branchpoints[k].name == name) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

int Circuit::min_step() const {
    int m = INT_MAX;
    for (const auto &l : locations) {
        m = std::min(m, l.step);
    }
    return m;
}

int Circuit::max_step() const {
    int m = INT_MIN;
    for (const auto &l : locations) {
        m = std::max(m, l.step);
    }
    return m;
}

namespace {

struct PendingCond {
    std::string name;
    bool pass;
};

int parse_int(const std::string &s, int line) {
    if (s.empty()) {
        throw NetlistError(line, "expected an integer");
    }
    char *end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (*end != 0) {
        throw NetlistError(line, "expected an integer, got '" + s + "'");
    }
    return static_cast<int>(v);
}

QubitAddress parse_address(const std::string &tok, int line) {
    if (tok.size() < 6 || tok[0] != 'q' || tok[1] != '(' || tok.back() != ')') {
        throw NetlistError(line, "expected q(a,b), got '" + tok + "'");
    }
    std::string inner = tok.substr(2, tok.size() - 3);
    size_t comma = inner.find(',');
    if (comma == std::string::npos) {
        throw NetlistError(line, "expected q(a,b), got '" + tok + "'");
    }
    return {parse_int(inner.substr(0, comma), line), parse_int(inner.substr(comma + 1), line)};
}

PendingCond parse_branch(const std::string &tok, int line) {
    // branch=<name>:<pass|fail>
    size_t colon = tok.rfind(':');
    if (colon == std::string::npos || colon <= 7) {
        throw NetlistError(line, "malformed branch token '" + tok + "'");
    }
    std::string val = tok.substr(colon + 1);
    if (val != "pass" && val != "fail") {
        throw NetlistError(line, "branch outcome must be pass or fail");
    }
    return {tok.substr(7, colon - 7), val == "pass"};
}

std::vector<std::string> split_ws(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

bool starts_with(const std::string &s, const char *prefix) {
    return s.rfind(prefix, 0) == 0;
}

}  // namespace

Circuit parse_netlist_unchecked(const std::string &text) {
    Circuit c;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool saw_mode = false;
    std::vector<std::vector<PendingCond>> loc_conds;
    std::vector<int> loc_lines;
    std::vector<std::vector<PendingCond>> syn_conds;
    std::vector<std::array<std::string, 3>> ec_names;
    std::vector<int> ec_lines;
    std::vector<int> syn_lines;
    std::vector<bool> bp_has_step;
    std::vector<int> bp_lines;

    auto read_addrs = [&](const std::vector<std::string> &toks, size_t &i, size_t n) {
        std::vector<QubitAddress> out;
        for (size_t k = 0; k < n; k++) {
            if (i >= toks.size()) {
                throw NetlistError(line, "too few qubit addresses");
            }
            out.push_back(parse_address(toks[i++], line));
        }
        return out;
    };

    while (std::getline(in, raw)) {
        line++;
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        size_t first = raw.find_first_not_of(" \t");
        if (first == std::string::npos) {
            continue;
        }
        if (raw[first] == '#') {
            std::string body = raw.substr(first + 1);
            if (!body.empty() && body[0] == ' ') {
                body.erase(0, 1);
            }
            c.comments.push_back(body);
            continue;
        }
        auto toks = split_ws(raw);
        const std::string &head = toks[0];
        if (head == "mode") {
            if (toks.size() != 2) {
                throw NetlistError(line, "expected 'mode local|nonlocal'");
            }
            try {
                c.mode = parse_mode(toks[1]);
            } catch (const std::invalid_argument &e) {
                throw NetlistError(line, e.what());
            }
            saw_mode = true;
        } else if (head == "exrec") {
            if (toks.size() != 2) {
                throw NetlistError(line, "expected 'exrec <type>'");
            }
            c.exrec = parse_int(toks[1], line);
            if (c.exrec < 0 || c.exrec >= NUM_LOCATION_TYPES) {
                throw NetlistError(line, "exrec type out of range");
            }
        } else if (head == "role") {
            if (toks.size() != 3) {
                throw NetlistError(line, "expected 'role q(a,b) <role>'");
            }
            QubitAddress q = parse_address(toks[1], line);
            Role r;
            if (toks[2] == "data") {
                r = Role::DATA;
            } else if (toks[2] == "ancilla") {
                r = Role::ANCILLA;
            } else if (toks[2] == "verification") {
                r = Role::VERIFICATION;
            } else if (toks[2] == "dummy") {
                r = Role::DUMMY;
            } else {
                throw NetlistError(line, "unknown role '" + toks[2] + "'");
            }
            c.roles.push_back({q, r});
        } else if (head == "branchpoint") {
            // branchpoint <name> parity-of q q q [at <t>]
            if (toks.size() != 6 && toks.size() != 8) {
                throw NetlistError(line, "expected 'branchpoint <name> parity-of q q q [at <t>]'");
            }
            if (toks[2] != "parity-of") {
                throw NetlistError(line, "expected 'parity-of'");
            }
            Branchpoint bp;
            bp.name = toks[1];
            if (c.branchpoint_index(bp.name) >= 0) {
                throw NetlistError(line, "duplicate branchpoint '" + bp.name + "'");
            }
            size_t i = 3;
            auto qs = read_addrs(toks, i, 3);
            std::copy(qs.begin(), qs.end(), bp.qubits.begin());
            bool has_step = false;
            if (toks.size() == 8) {
                if (toks[6] != "at") {
                    throw NetlistError(line, "expected 'at <step>'");
                }
                bp.step = parse_int(toks[7], line);
                has_step = true;
            }
            c.directive_order.push_back({DirectiveKind::BRANCHPOINT, (int)c.branchpoints.size()});
            c.branchpoints.push_back(bp);
            bp_has_step.push_back(has_step);
            bp_lines.push_back(line);
        } else if (head == "syndrome") {
            // syndrome <name> correct=<X|Z> at <t> anc q*7 data q*7 [branch=..]*
            if (toks.size() < 21 || toks[3] != "at" || toks[5] != "anc" || toks[13] != "data") {
                throw NetlistError(line, "expected 'syndrome <name> correct=<X|Z> at <t> anc q*7 data q*7'");
            }
            SyndromeDecl s;
            s.name = toks[1];
            if (toks[2] != "correct=X" && toks[2] != "correct=Z") {
                throw NetlistError(line, "expected correct=X or correct=Z");
            }
            s.correct = toks[2].back();
            s.step = parse_int(toks[4], line);
            size_t i = 6;
            auto anc = read_addrs(toks, i, 7);
            i = 14;
            auto data = read_addrs(toks, i, 7);
            std::copy(anc.begin(), anc.end(), s.anc.begin());
            std::copy(data.begin(), data.end(), s.data.begin());
            std::vector<PendingCond> conds;
            for (; i < toks.size(); i++) {
                if (!starts_with(toks[i], "branch=")) {
                    throw NetlistError(line, "unexpected token '" + toks[i] + "'");
                }
                conds.push_back(parse_branch(toks[i], line));
            }
            c.directive_order.push_back({DirectiveKind::SYNDROME, (int)c.syndromes.size()});
            c.syndromes.push_back(s);
            syn_conds.push_back(conds);
            syn_lines.push_back(line);
        } else if (head == "ec") {
            if (toks.size() != 5) {
                throw NetlistError(line, "expected 'ec <name> <bp1> <bp2> <bp3>'");
            }
            EcDecl e;
            e.name = toks[1];
            c.directive_order.push_back({DirectiveKind::EC, (int)c.ecs.size()});
            c.ecs.push_back(e);
            ec_names.push_back({toks[2], toks[3], toks[4]});
            ec_lines.push_back(line);
        } else if (head == "output") {
            if (toks.size() < 2) {
                throw NetlistError(line, "expected 'output <kind> ...'");
            }
            OutputDecl o;
            const std::string &k = toks[1];
            size_t i = 2;
            if (k == "any") {
                o.kind = OutputKind::ANY;
            } else if (k == "zero") {
                o.kind = OutputKind::ZERO;
            } else if (k == "plus") {
                o.kind = OutputKind::PLUS;
            } else if (k == "xmeas" || k == "zmeas") {
                o.kind = k == "xmeas" ? OutputKind::XMEAS : OutputKind::ZMEAS;
                if (toks.size() < 4 || toks[2] != "at") {
                    throw NetlistError(line, "measurement output needs 'at <step>'");
                }
                o.step = parse_int(toks[3], line);
                i = 4;
            } else {
                throw NetlistError(line, "unknown output kind '" + k + "'");
            }
            if (toks.size() != i + 7) {
                throw NetlistError(line, "output needs exactly 7 qubits");
            }
            auto qs = read_addrs(toks, i, 7);
            std::copy(qs.begin(), qs.end(), o.qubits.begin());
            c.directive_order.push_back({DirectiveKind::OUTPUT, (int)c.outputs.size()});
            c.outputs.push_back(o);
        } else if (head == "step") {
            // step <t>: <type> q [q] region=<tag> [branch=..]*
            if (toks.size() < 4 || toks[1].empty() || toks[1].back() != ':') {
                throw NetlistError(line, "expected 'step <t>: <type> q(..) region=<tag>'");
            }
            Location l;
            l.step = parse_int(toks[1].substr(0, toks[1].size() - 1), line);
            if (l.step < 0) {
                throw NetlistError(line, "negative timestep");
            }
            l.type = parse_int(toks[2], line);
            if (l.type < 0 || l.type >= NUM_LOCATION_TYPES) {
                throw NetlistError(line, "location type out of range");
            }
            size_t i = 3;
            std::vector<QubitAddress> qs;
            while (i < toks.size() && starts_with(toks[i], "q(")) {
                qs.push_back(parse_address(toks[i++], line));
            }
            if ((int)qs.size() != location_type(l.type).arity) {
                throw NetlistError(line, std::string("type ") + location_type(l.type).name + " needs " +
                                             std::to_string(location_type(l.type).arity) + " qubit(s)");
            }
            l.num_qubits = static_cast<uint8_t>(qs.size());
            for (size_t k = 0; k < qs.size(); k++) {
                l.qubits[k] = qs[k];
            }
            if (i >= toks.size() || !starts_with(toks[i], "region=")) {
                throw NetlistError(line, "missing region=<tag>");
            }
            try {
                l.region = parse_region(toks[i].substr(7));
            } catch (const std::invalid_argument &e) {
                throw NetlistError(line, e.what());
            }
            i++;
            std::vector<PendingCond> conds;
            for (; i < toks.size(); i++) {
                if (!starts_with(toks[i], "branch=")) {
                    throw NetlistError(line, "unexpected token '" + toks[i] + "'");
                }
                conds.push_back(parse_branch(toks[i], line));
            }
            c.locations.push_back(l);
            loc_conds.push_back(conds);
            loc_lines.push_back(line);
        } else {
            throw NetlistError(line, "unknown directive '" + head + "'");
        }
    }
    if (!saw_mode) {
        throw NetlistError(line, "missing 'mode' directive");
    }

    auto resolve = [&](const std::vector<PendingCond> &pending, int at_line) {
        std::vector<BranchCond> out;
        for (const auto &p : pending) {
            int k = c.branchpoint_index(p.name);
            if (k < 0) {
                throw NetlistError(at_line, "unknown branchpoint '" + p.name + "'");
            }
            out.push_back({k, p.pass});
        }
        return out;
    };
    for (size_t k = 0; k < c.locations.size(); k++) {
        c.locations[k].conds = resolve(loc_conds[k], loc_lines[k]);
    }
    for (size_t k = 0; k < c.syndromes.size(); k++) {
        c.syndromes[k].conds = resolve(syn_conds[k], syn_lines[k]);
    }
    for (size_t k = 0; k < c.ecs.size(); k++) {
        for (int j = 0; j < 3; j++) {
            int b = c.branchpoint_index(ec_names[k][j]);
            if (b < 0) {
                throw NetlistError(ec_lines[k], "unknown branchpoint '" + ec_names[k][j] + "'");
            }
            c.ecs[k].bps[j] = b;
        }
    }
    // A branchpoint without 'at' resolves to the last X-measurement step of its qubits.
    for (size_t k = 0; k < c.branchpoints.size(); k++) {
        if (bp_has_step[k]) {
            continue;
        }
        int best = -1;
        for (const auto &l : c.locations) {
            if (l.type == 13 && std::find(c.branchpoints[k].qubits.begin(), c.branchpoints[k].qubits.end(),
                                          l.qubits[0]) != c.branchpoints[k].qubits.end()) {
                best = std::max(best, l.step);
            }
        }
        if (best < 0) {
            throw NetlistError(bp_lines[k], "branchpoint qubits are never X-measured");
        }
        c.branchpoints[k].step = best;
    }
    return c;
}

namespace {

std::string conds_str(const Circuit &c, const std::vector<BranchCond> &conds) {
    std::string s;
    for (const auto &b : conds) {
        s += " branch=" + c.branchpoints[b.branchpoint].name + (b.pass ? ":pass" : ":fail");
    }
    return s;
}

}  // namespace

std::string serialize_netlist(const Circuit &c) {
    std::ostringstream out;
    for (const auto &s : c.comments) {
        out << (s.empty() ? "#" : "# " + s) << "\n";
    }
    out << "mode " << mode_name(c.mode) << "\n";
    if (c.exrec >= 0) {
        out << "exrec " << c.exrec << "\n";
    }
    for (const auto &[q, r] : c.roles) {
        out << "role " << address_str(q) << " " << role_name(r) << "\n";
    }
    for (const auto &[kind, k] : c.directive_order) {
        switch (kind) {
            case DirectiveKind::BRANCHPOINT: {
                const auto &b = c.branchpoints[k];
                out << "branchpoint " << b.name << " parity-of";
                for (const auto &q : b.qubits) {
                    out << " " << address_str(q);
                }
                out << " at " << b.step << "\n";
                break;
            }
            case DirectiveKind::SYNDROME: {
                const auto &s = c.syndromes[k];
                out << "syndrome " << s.name << " correct=" << s.correct << " at " << s.step << " anc";
                for (const auto &q : s.anc) {
                    out << " " << address_str(q);
                }
                out << " data";
                for (const auto &q : s.data) {
                    out << " " << address_str(q);
                }
                out << conds_str(c, s.conds) << "\n";
                break;
            }
            case DirectiveKind::EC: {
                const auto &e = c.ecs[k];
                out << "ec " << e.name;
                for (int b : e.bps) {
                    out << " " << c.branchpoints[b].name;
                }
                out << "\n";
                break;
            }
            case DirectiveKind::OUTPUT: {
                const auto &o = c.outputs[k];
                out << "output " << output_kind_name(o.kind);
                if (o.kind == OutputKind::XMEAS || o.kind == OutputKind::ZMEAS) {
                    out << " at " << o.step;
                }
                for (const auto &q : o.qubits) {
                    out << " " << address_str(q);
                }
                out << "\n";
                break;
            }
        }
    }
    for (const auto &l : c.locations) {
        out << "step " << l.step << ": " << l.type;
        for (int k = 0; k < l.num_qubits; k++) {
            out << " " << address_str(l.qubits[k]);
        }
        out << " region=" << region_name(l.region) << conds_str(c, l.conds) << "\n";
    }
    return out.str();
}

Circuit parse_netlist(const std::string &text) {
    Circuit c = parse_netlist_unchecked(text);
    validate_circuit(c);
    return c;
}

Circuit read_netlist_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open netlist '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_netlist(buf.str());
    } catch (const NetlistError &e) {
        throw NetlistError(e.line, path + ": " + e.what());
    }
}

bool conds_hold(const std::vector<BranchCond> &conds, const std::vector<uint8_t> &pass) {
    for (const auto &b : conds) {
        if ((pass[b.branchpoint] != 0) != b.pass) {
            return false;
        }
    }
    return true;
}

PathSet enumerate_paths(const Circuit &c) {
    PathSet ps;
    std::vector<bool> used(c.branchpoints.size(), false);
    for (const auto &l : c.locations) {
        for (const auto &b : l.conds) {
            used[b.branchpoint] = true;
        }
    }
    for (const auto &s : c.syndromes) {
        for (const auto &b : s.conds) {
            used[b.branchpoint] = true;
        }
    }
    for (size_t k = 0; k < used.size(); k++) {
        if (used[k]) {
            ps.structural.push_back(static_cast<int>(k));
        }
    }
    std::stable_sort(ps.structural.begin(), ps.structural.end(),
                     [&](int a, int b) { return c.branchpoints[a].step < c.branchpoints[b].step; });
    size_t s = ps.structural.size();
    if (s > 20) {
        throw std::runtime_error("too many gating branchpoints");
    }
    std::map<std::vector<bool>, int> seen;
    ps.path_of_assignment.resize(size_t{1} << s);
    for (uint32_t a = 0; a < (uint32_t{1} << s); a++) {
        std::vector<uint8_t> pass(c.branchpoints.size(), 1);
        for (size_t k = 0; k < s; k++) {
            pass[ps.structural[k]] = (a >> k) & 1;
        }
        std::vector<bool> key(c.locations.size() + c.syndromes.size());
        for (size_t k = 0; k < c.locations.size(); k++) {
            key[k] = conds_hold(c.locations[k].conds, pass);
        }
        for (size_t k = 0; k < c.syndromes.size(); k++) {
            key[c.locations.size() + k] = conds_hold(c.syndromes[k].conds, pass);
        }
        auto it = seen.find(key);
        if (it != seen.end()) {
            ps.path_of_assignment[a] = it->second;
            continue;
        }
        int id = static_cast<int>(ps.paths.size());
        seen[key] = id;
        ps.path_of_assignment[a] = id;
        BranchPath p;
        p.pass = pass;
        p.active_lines.assign(key.begin(), key.begin() + c.locations.size());
        ps.paths.push_back(std::move(p));
    }
    return ps;
}

std::vector<Site> merge_sites(const Circuit &c) {
    std::vector<Site> sites;
    std::map<std::tuple<int, int, QubitAddress, QubitAddress, int>, int> index;
    for (size_t k = 0; k < c.locations.size(); k++) {
        const auto &l = c.locations[k];
        QubitAddress q1 = l.num_qubits > 1 ? l.qubits[1] : QubitAddress{-1, -1};
        auto key = std::make_tuple(l.step, l.type, l.qubits[0], q1, static_cast<int>(l.region));
        auto it = index.find(key);
        if (it == index.end()) {
            index[key] = static_cast<int>(sites.size());
            sites.push_back({l.type, l.step, l.num_qubits, l.qubits, l.region, {static_cast<int>(k)}});
        } else {
            sites[it->second].lines.push_back(static_cast<int>(k));
        }
    }
    return sites;
}

namespace {

struct Identity {
    Role kind;
    int measured_at = -1;
    int last_use = -1;
};

/// Tracks which logical qubit sits on every lattice site along one path.
/// Run once to learn the last use of every identity, then again to check.
void check_occupancy(const Circuit &c, const std::vector<bool> &active, std::vector<int> &last_use, bool check) {
    std::map<QubitAddress, int> occ;
    std::vector<Identity> ids;
    for (const auto &[q, r] : c.roles) {
        if (r == Role::DUMMY || occ.count(q)) {
            continue;
        }
        occ[q] = static_cast<int>(ids.size());
        ids.push_back({r});
    }
    std::vector<int> order;
    for (size_t k = 0; k < c.locations.size(); k++) {
        if (active[k]) {
            order.push_back(static_cast<int>(k));
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return c.locations[a].step < c.locations[b].step; });
    auto who = [&](const QubitAddress &q) {
        auto it = occ.find(q);
        return it == occ.end() ? -1 : it->second;
    };
    auto lu = [&](int id) { return id < (int)last_use.size() ? last_use[id] : -1; };
    auto live = [&](int id) { return id >= 0 && ids[id].measured_at < 0; };
    auto free_at = [&](int id, int step) {
        if (id < 0 || ids[id].measured_at >= 0) {
            return true;
        }
        return ids[id].kind != Role::DATA && lu(id) < step;
    };
    auto use = [&](int id, int step) {
        if (id >= 0) {
            ids[id].last_use = step;
        }
    };
    auto move_pair = [&](const QubitAddress &p, const QubitAddress &q, int a, int b) {
        if (a >= 0) {
            occ[q] = a;
        } else {
            occ.erase(q);
        }
        if (b >= 0) {
            occ[p] = b;
        } else {
            occ.erase(p);
        }
    };
    auto fail = [&](int k, const std::string &msg) {
        throw NetlistError(k + 1, "location " + std::to_string(k + 1) + " (step " +
                                      std::to_string(c.locations[k].step) + "): " + msg);
    };
    for (int k : order) {
        const Location &l = c.locations[k];
        const LocationType &t = location_type(l.type);
        int a = who(l.qubits[0]);
        int b = l.num_qubits > 1 ? who(l.qubits[1]) : -1;
        switch (t.category) {
            case Category::PREP: {
                if (check && a >= 0 && live(a) && !free_at(a, l.step)) {
                    fail(k, "preparation overwrites a live qubit");
                }
                occ[l.qubits[0]] = static_cast<int>(ids.size());
                ids.push_back({Role::ANCILLA});
                break;
            }
            case Category::SWAP: {
                if (check && !free_at(a, l.step) && !free_at(b, l.step)) {
                    fail(k, "SWAP with non-dummy partner");
                }
                move_pair(l.qubits[0], l.qubits[1], a, b);
                break;
            }
            default: {
                if (check && (!live(a) || (l.num_qubits > 1 && !live(b)))) {
                    fail(k, std::string(t.name) + " acts on a dummy or measured qubit");
                }
                use(a, l.step);
                use(b, l.step);
                if (t.category == Category::MEAS) {
                    ids[a].measured_at = l.step;
                }
                if (t.gate == GateKind::CNOT_SWAP || t.gate == GateKind::CZ_SWAP) {
                    move_pair(l.qubits[0], l.qubits[1], a, b);
                }
                break;
            }
        }
    }
    if (!check) {
        last_use.assign(ids.size(), -1);
        for (size_t k = 0; k < ids.size(); k++) {
            last_use[k] = ids[k].last_use;
        }
    }
}

}  // namespace

void validate_circuit(const Circuit &c) {
    for (size_t k = 0; k < c.locations.size(); k++) {
        const Location &l = c.locations[k];
        const LocationType &t = location_type(l.type);
        int line = static_cast<int>(k + 1);
        if (l.num_qubits == 2 && l.qubits[0] == l.qubits[1]) {
            throw NetlistError(line, "two-qubit location on a single qubit");
        }
        if (c.mode == Mode::LOCAL) {
            for (int j = 0; j < l.num_qubits; j++) {
                if (l.qubits[j].a < 0 || l.qubits[j].b < 0) {
                    throw NetlistError(line, "negative lattice coordinate");
                }
            }
            if (l.num_qubits == 2) {
                int dr = std::abs(l.qubits[0].a - l.qubits[1].a);
                int dc = std::abs(l.qubits[0].b - l.qubits[1].b);
                bool ok = t.orientation == Orientation::HORIZONTAL ? (dr == 0 && dc == 1) : (dr == 1 && dc == 0);
                if (!ok) {
                    throw NetlistError(line, std::string(t.name) + " on non-adjacent qubits " +
                                                 address_str(l.qubits[0]) + " " + address_str(l.qubits[1]));
                }
            }
        } else {
            for (int j = 0; j < l.num_qubits; j++) {
                if (l.qubits[j].a < 0 || l.qubits[j].b < 0 || l.qubits[j].b > 9) {
                    throw NetlistError(line, "nonlocal address out of range");
                }
            }
        }
        for (const auto &b : l.conds) {
            if (c.branchpoints[b.branchpoint].step >= l.step) {
                throw NetlistError(line, "condition on branchpoint '" + c.branchpoints[b.branchpoint].name +
                                             "' that is decided at or after this step");
            }
        }
    }
    PathSet ps = enumerate_paths(c);
    for (const auto &p : ps.paths) {
        std::set<std::pair<int, QubitAddress>> booked;
        for (size_t k = 0; k < c.locations.size(); k++) {
            if (!p.active_lines[k]) {
                continue;
            }
            const Location &l = c.locations[k];
            for (int j = 0; j < l.num_qubits; j++) {
                if (!booked.insert({l.step, l.qubits[j]}).second) {
                    throw NetlistError(static_cast<int>(k + 1), "qubit " + address_str(l.qubits[j]) +
                                                                    " double-booked at step " + std::to_string(l.step));
                }
            }
        }
        auto measured = [&](const QubitAddress &q, int step, int type) {
            for (size_t k = 0; k < c.locations.size(); k++) {
                const Location &l = c.locations[k];
                if (p.active_lines[k] && l.step == step && l.type == type && l.qubits[0] == q) {
                    return true;
                }
            }
            return false;
        };
        for (const auto &s : c.syndromes) {
            if (!conds_hold(s.conds, p.pass)) {
                continue;
            }
            for (const auto &q : s.anc) {
                if (!measured(q, s.step, 13)) {
                    throw NetlistError(0, "syndrome '" + s.name + "' ancilla " + address_str(q) +
                                              " is not X-measured at step " + std::to_string(s.step));
                }
            }
        }
        std::vector<int> last_use;
        check_occupancy(c, p.active_lines, last_use, false);
        check_occupancy(c, p.active_lines, last_use, true);
    }
    for (const auto &o : c.outputs) {
        if (o.kind == OutputKind::XMEAS || o.kind == OutputKind::ZMEAS) {
            int type = o.kind == OutputKind::XMEAS ? 13 : 14;
            for (const auto &q : o.qubits) {
                bool found = false;
                for (const auto &l : c.locations) {
                    found |= l.step == o.step && l.type == type && l.qubits[0] == q;
                }
                if (!found) {
                    throw NetlistError(0, "output qubit " + address_str(q) + " is not measured at step " +
                                              std::to_string(o.step));
                }
            }
        }
    }
}

RegionSet all_regions() {
    RegionSet r;
    for (int k = 0; k < NUM_REGIONS; k++) {
        r.insert(static_cast<Region>(k));
    }
    return r;
}

RegionSet parse_region_set(const std::string &s) {
    if (s.empty() || s == "all") {
        return all_regions();
    }
    RegionSet r;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        r.insert(parse_region(tok));
    }
    return r;
}

std::vector<uint8_t> pass_assignment(const Circuit &c) {
    return std::vector<uint8_t>(c.branchpoints.size(), 1);
}

std::vector<uint8_t> first_attempt_fail_assignment(const Circuit &c) {
    auto pass = pass_assignment(c);
    for (const auto &e : c.ecs) {
        pass[e.bps[0]] = 0;
    }
    return pass;
}

std::array<int, NUM_LOCATION_TYPES> count_locations(
    const Circuit &c, const RegionSet &regions, const std::vector<uint8_t> &pass) {
    std::array<int, NUM_LOCATION_TYPES> counts{};
    for (const Site &s : merge_sites(c)) {
        if (!regions.count(s.region)) {
            continue;
        }
        bool active = false;
        for (int k : s.lines) {
            active |= conds_hold(c.locations[k].conds, pass);
        }
        if (active) {
            counts[s.type]++;
        }
    }
    return counts;
}

int duration(const Circuit &c, const RegionSet &regions) {
    int lo = INT_MAX, hi = INT_MIN;
    for (const auto &l : c.locations) {
        if (regions.count(l.region)) {
            lo = std::min(lo, l.step);
            hi = std::max(hi, l.step);
        }
    }
    if (lo > hi) {
        throw std::invalid_argument("duration: no locations in the selected regions");
    }
    return hi - lo + 1;
}

}  // namespace latticeft
