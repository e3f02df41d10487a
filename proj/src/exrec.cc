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

#include "latticeft/exrec.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "latticeft/census.h"
#include "latticeft/steane.h"

namespace latticeft {

std::string default_fixtures_dir() {
    const char *env = std::getenv("LATTICEFT_FIXTURES");
    if (env != nullptr && *env) {
        return env;
    }
#ifdef LATTICEFT_FIXTURES_DIR
    return LATTICEFT_FIXTURES_DIR;
#else
    return "fixtures";
#endif
}

std::string netlist_path(const std::string &dir, const std::string &stem, Mode mode) {
    return dir + "/" + stem + "_" + mode_name(mode) + ".net";
}

int trailing_ec_count(int type) {
    if (type < 0 || type >= NUM_LOCATION_TYPES) {
        throw std::out_of_range("location type " + std::to_string(type) + " out of range");
    }
    if (type <= 7) {
        return 2;
    }
    if (type == 13 || type == 14) {
        return 0;
    }
    return 1;
}

ExRec build_exrec(int type, Mode mode, const std::string &dir) {
    ExRec e;
    e.type = type;
    e.mode = mode;
    e.q = trailing_ec_count(type);
    std::string path = netlist_path(dir, "exrec_" + std::to_string(type), mode);
    Circuit c = read_netlist_file(path);
    if (c.exrec != type || c.mode != mode) {
        throw std::runtime_error(path + ": header does not match exrec " + std::to_string(type));
    }
    e.program = compile(c);
    return e;
}

Program load_component(const std::string &stem, Mode mode, const std::string &dir) {
    return compile(read_netlist_file(netlist_path(dir, stem, mode)));
}

std::array<MalignancyMatrix, NUM_LOCATION_TYPES> census_all(Mode mode, const CensusOptions &opts,
                                                            const std::string &dir) {
    std::array<MalignancyMatrix, NUM_LOCATION_TYPES> out;
    for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
        ExRec e = build_exrec(t, mode, dir);
        out[t] = census_pairs(e.program, opts);
        out[t].exrec = t;
        out[t].mode = mode;
    }
    return out;
}

BadLocationCount self_badloc(Mode mode, const std::string &dir) {
    return census_badloc(load_component("gv", mode, dir));
}

StructureSummary summarize_structure(Mode mode, const std::string &dir) {
    StructureSummary s;
    s.mode = mode;
    Circuit ec = read_netlist_file(netlist_path(dir, "ec", mode));
    s.ec_pass = count_locations(ec, all_regions(), pass_assignment(ec));
    s.ec_fail = count_locations(ec, all_regions(), first_attempt_fail_assignment(ec));
    s.ec_duration = duration(ec, all_regions());
    for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
        Circuit c = read_netlist_file(netlist_path(dir, "exrec_" + std::to_string(t), mode));
        RegionSet rec = {Region::GA, Region::TRAILING_EC_A, Region::TRAILING_EC_B, Region::PREP_ATTEMPT_1,
                         Region::PREP_ATTEMPT_2, Region::PREP_ATTEMPT_3};
        s.rec_duration[t] = duration(c, rec);
        s.exrec_duration[t] = duration(c, all_regions());
        TypeCounts counts = count_locations(c, all_regions(), pass_assignment(c));
        int total = 0;
        for (int k : counts) {
            total += k;
        }
        s.exrec_total[t] = total;
        if (t == 0) {
            s.hcnot_ga = count_locations(c, {Region::GA}, pass_assignment(c));
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Ancilla preparation checks.

int encoder_end_step(const Program &g) {
    int end = -1;
    for (const auto &op : g.ops) {
        if (location_type(op.type).category == Category::TWO_QUBIT_GATE) {
            end = std::max(end, op.step);
        }
    }
    if (end < 0) {
        throw std::invalid_argument("encoder has no two-qubit gates");
    }
    return end;
}

namespace {

bool moves_qubits(int type) {
    GateKind g = location_type(type).gate;
    return g == GateKind::SWAP || g == GateKind::CNOT_SWAP || g == GateKind::CZ_SWAP;
}

/// Qubit index holding each code qubit of the first output block right after `step`.
std::array<int, 7> code_qubits_after(const Program &p, int step) {
    if (p.outputs.empty()) {
        throw std::invalid_argument("circuit has no output block");
    }
    std::array<int, 7> q = p.outputs[0].qubit;
    for (size_t k = p.ops.size(); k-- > 0;) {
        const auto &op = p.ops[k];
        if (op.step <= step || !moves_qubits(op.type)) {
            continue;
        }
        for (int &x : q) {
            if (x == op.q0) {
                x = op.q1;
            } else if (x == op.q1) {
                x = op.q0;
            }
        }
    }
    return q;
}

}  // namespace

int verification_parity(const Program &gv, int inject_after, const std::vector<int> &x_qubits) {
    if (gv.branches.empty()) {
        throw std::invalid_argument("circuit has no verification branchpoint");
    }
    std::array<int, 7> q = code_qubits_after(gv, inject_after);
    SimOptions opts;
    opts.input_after_step = inject_after;
    for (int j : x_qubits) {
        if (j < 1 || j > 7) {
            throw std::out_of_range("code qubit index must be 1..7");
        }
        opts.input.push_back({q[j - 1], 1, 0});
    }
    SimOutcome out = simulate(gv, {}, opts);
    if (out.branch[0] < 0) {
        throw std::runtime_error("verification was not evaluated");
    }
    return out.branch[0] == 0;
}

BlocklistReport verification_blocklist_check(const Program &gv, const Program &g) {
    BlocklistReport r;
    r.inject_after = encoder_end_step(g);
    auto add = [&](const std::string &name, const std::vector<int> &xs, int expected) {
        int parity = verification_parity(gv, r.inject_after, xs);
        r.entries.push_back({name, parity, expected});
        if (expected >= 0 && parity != expected) {
            r.ok = false;
        }
    };
    add("none", {}, 0);
    add("X2X7", {2, 7}, 1);
    add("X3X6", {3, 6}, 1);
    add("X4X5", {4, 5}, 1);
    add("X5", {5}, 0);
    for (int j = 1; j <= 7; j++) {
        if (j != 5) {
            add("X" + std::to_string(j), {j}, -1);
        }
    }
    return r;
}

bool encoded_zero_check(const Program &g) {
    SimOutcome fault_free = simulate(g, {});
    for (size_t q = 0; q < fault_free.frame_x.size(); q++) {
        if (fault_free.frame_x[q] || fault_free.frame_z[q]) {
            return false;
        }
    }
    // Stabilizer generators of the ideal state, tracked without signs. Circuits
    // built from CNOT and SWAP keep every generator X-type or Z-type, so signs
    // stay +1.
    size_t n = g.num_qubits();
    std::vector<PauliMask> gens;
    for (const auto &op : g.ops) {
        const LocationType &t = location_type(op.type);
        if (t.category == Category::PREP) {
            for (auto &s : gens) {
                if (s.x(op.q0) || s.z(op.q0)) {
                    return false;
                }
            }
            PauliMask s(n);
            if (t.basis == 'Z') {
                s.set_z(op.q0, true);
            } else {
                s.set_x(op.q0, true);
            }
            gens.push_back(s);
            continue;
        }
        if (t.category == Category::MEAS) {
            return false;
        }
        if (t.gate == GateKind::IDENTITY) {
            continue;
        }
        if (t.gate == GateKind::H || t.gate == GateKind::CZ || t.gate == GateKind::CZ_SWAP) {
            return false;
        }
        for (auto &s : gens) {
            s = op.q1 >= 0 ? conjugate(t.gate, op.q0, op.q1, s) : conjugate(t.gate, op.q0, s);
        }
    }
    const CodeDefinition &code = CodeDefinition::steane();
    const auto &out = g.outputs.at(0).qubit;
    auto lift = [&](const PauliMask &p7) {
        PauliMask p(n);
        for (int k = 0; k < 7; k++) {
            p.set_x(out[k], p7.x(k));
            p.set_z(out[k], p7.z(k));
        }
        return p;
    };
    // Row-reduce the generators over GF(2) on the 2n symplectic bits.
    auto bit = [&](const PauliMask &p, size_t col) { return col < n ? p.x(col) : p.z(col - n); };
    auto flip_row = [&](PauliMask &a, const PauliMask &b) { a *= b; };
    std::vector<PauliMask> rows = gens;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col = 0; col < 2 * n && r < rows.size(); col++) {
        size_t sel = r;
        while (sel < rows.size() && !bit(rows[sel], col)) {
            sel++;
        }
        if (sel == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[sel]);
        for (size_t k = 0; k < rows.size(); k++) {
            if (k != r && bit(rows[k], col)) {
                flip_row(rows[k], rows[r]);
            }
        }
        pivots.push_back(col);
        r++;
    }
    rows.resize(r);
    auto in_span = [&](PauliMask p) {
        for (size_t k = 0; k < rows.size(); k++) {
            if (bit(p, pivots[k])) {
                p *= rows[k];
            }
        }
        return p.is_identity();
    };
    for (const auto &s : code.stabilizers) {
        if (!in_span(lift(s))) {
            return false;
        }
    }
    return in_span(lift(code.logical_z));
}

// ---------------------------------------------------------------------------
// Fault-tolerance sweeps.

BlockError classify_block(uint8_t x_bits, uint8_t z_bits) {
    const auto &t = steane_decode_table();
    const Decode7 &dx = t[x_bits & 0x7F];
    const Decode7 &dz = t[z_bits & 0x7F];
    return {dx.flip_qubit >= 0, dz.flip_qubit >= 0, dx.logical != 0, dz.logical != 0};
}

namespace {

struct BlockBits {
    uint8_t x;
    uint8_t z;
};

BlockBits block_bits(const Program &p, const SimOutcome &out, size_t o) {
    BlockBits b{0, 0};
    for (int k = 0; k < 7; k++) {
        int q = p.outputs[o].qubit[k];
        b.x |= uint8_t(out.frame_x[q] & 1) << k;
        b.z |= uint8_t(out.frame_z[q] & 1) << k;
    }
    return b;
}

/// No error and single X, Y or Z on each of 7 qubits.
std::vector<BlockBits> weight_le1_errors() {
    std::vector<BlockBits> v = {{0, 0}};
    for (int k = 0; k < 7; k++) {
        v.push_back({uint8_t(1 << k), 0});
        v.push_back({uint8_t(1 << k), uint8_t(1 << k)});
        v.push_back({0, uint8_t(1 << k)});
    }
    return v;
}

void add_block_input(std::vector<InputError> &in, const std::array<int, 7> &qubits, BlockBits e) {
    for (int k = 0; k < 7; k++) {
        uint8_t x = (e.x >> k) & 1, z = (e.z >> k) & 1;
        if (x || z) {
            in.push_back({qubits[k], x, z});
        }
    }
}

std::string bits_str(BlockBits e) {
    std::string s(7, '_');
    for (int k = 0; k < 7; k++) {
        bool x = (e.x >> k) & 1, z = (e.z >> k) & 1;
        s[k] = x && z ? 'Y' : x ? 'X' : z ? 'Z' : '_';
    }
    return s;
}

struct Sweep {
    PropertyResult r;
    explicit Sweep(std::string name) {
        r.name = std::move(name);
    }
    void check(bool ok, const std::function<std::string()> &what) {
        r.cases++;
        if (!ok) {
            if (r.violations == 0) {
                r.first_violation = what();
            }
            r.violations++;
            r.ok = false;
        }
    }
};

std::string fault_str(const Program &p, int s, uint8_t code) {
    const Site &x = p.sites[s];
    std::ostringstream out;
    out << "site " << s << " (step " << x.step << ", " << location_type(x.type).name << " "
        << address_str(x.qubits[0]);
    if (x.num_qubits > 1) {
        out << " " << address_str(x.qubits[1]);
    }
    out << ") pauli " << int(code);
    return out.str();
}

std::vector<uint8_t> region_mask(const Program &p, const RegionSet &regions) {
    std::vector<uint8_t> m(p.num_sites(), 0);
    for (size_t s = 0; s < p.num_sites(); s++) {
        m[s] = regions.count(p.sites[s].region) != 0;
    }
    return m;
}

std::array<int, 7> syndrome_data(const Program &p, const std::string &name) {
    for (size_t k = 0; k < p.circuit.syndromes.size(); k++) {
        if (p.circuit.syndromes[k].name == name) {
            return p.syndromes[k].data_qubit;
        }
    }
    throw std::runtime_error("circuit has no syndrome '" + name + "'");
}

template <typename F>
void for_each_single_fault(const Program &p, const std::vector<uint8_t> *mask, F f) {
    for (size_t s = 0; s < p.num_sites(); s++) {
        if (mask && !(*mask)[s]) {
            continue;
        }
        for (uint8_t code : fault_alphabet(p.sites[s].type)) {
            f(static_cast<int>(s), code);
        }
    }
}

void ec_properties(Mode mode, const std::string &dir, std::vector<PropertyResult> &out) {
    Program ec = load_component("ec", mode, dir);
    const auto &data = ec.outputs.at(0).qubit;
    std::string tag = std::string(mode_name(mode)) + " ";
    auto run = [&](const FaultAssignment &fa, BlockBits in) {
        SimOptions o;
        add_block_input(o.input, data, in);
        return simulate(ec, fa, o);
    };

    Sweep p1(tag + "1: fault-free EC maps any input into the code space");
    for (uint32_t x = 0; x < 128; x++) {
        for (uint32_t z = 0; z < 128; z++) {
            BlockBits in{uint8_t(x), uint8_t(z)};
            SimOutcome r = run({}, in);
            BlockError e = classify_block(block_bits(ec, r, 0).x, block_bits(ec, r, 0).z);
            p1.check(!r.ec_failure && !e.x_detected && !e.z_detected, [&] { return "input " + bits_str(in); });
        }
    }
    out.push_back(p1.r);

    auto inputs = weight_le1_errors();
    Sweep p2(tag + "2: one-fault EC leaves at most one X and one Z error");
    Sweep p3(tag + "3: fault-free EC removes a single input error");
    Sweep p4(tag + "4: one-fault EC on clean input leaves at most one error");
    for (BlockBits in : inputs) {
        SimOutcome r = run({}, in);
        BlockBits b = block_bits(ec, r, 0);
        BlockError e = classify_block(b.x, b.z);
        p3.check(!r.ec_failure && !e.x_detected && !e.z_detected && !e.x_logical && !e.z_logical,
                 [&] { return "input " + bits_str(in) + " -> " + bits_str(b); });
    }
    for_each_single_fault(ec, nullptr, [&](int s, uint8_t code) {
        for (BlockBits in : inputs) {
            SimOutcome r = run({{s, code}}, in);
            BlockBits b = block_bits(ec, r, 0);
            BlockError e = classify_block(b.x, b.z);
            // Every 7-qubit Pauli is within one X and one Z error of a codeword,
            // so the output is valid whenever the EC completes.
            p2.check(!r.ec_failure, [&] { return fault_str(ec, s, code) + " input " + bits_str(in); });
            if (in.x == 0 && in.z == 0) {
                p4.check(!r.ec_failure && !e.x_logical && !e.z_logical,
                         [&] { return fault_str(ec, s, code) + " -> " + bits_str(b); });
            }
        }
    });
    out.push_back(p2.r);
    out.push_back(p3.r);
    out.push_back(p4.r);
}

void ga_properties(Mode mode, const std::string &dir, std::vector<PropertyResult> &out) {
    std::string tag = std::string(mode_name(mode)) + " ";
    Sweep p5(tag + "5: fault-free Ga keeps single input errors single");
    Sweep p6(tag + "6: one-fault Ga on clean input leaves at most one error per block");
    Sweep noy(tag + "5': fault-free Ga never turns an X or Z input into a Y");
    auto inputs = weight_le1_errors();
    for (int type = 0; type < NUM_LOCATION_TYPES; type++) {
        if (type >= 11 && type <= 14) {
            continue;
        }
        ExRec ex = build_exrec(type, mode, dir);
        const Program &p = ex.program;
        auto mask = region_mask(p, {Region::GA});
        std::vector<std::array<int, 7>> blocks = {syndrome_data(p, "LA.s1")};
        if (type <= 7) {
            blocks.push_back(syndrome_data(p, "LB.s1"));
        }
        SimOptions base;
        base.site_enabled = &mask;
        std::string name = "exrec " + std::to_string(type) + " ";
        auto all_ok = [&](const SimOutcome &r, bool allow_single) {
            for (size_t o = 0; o < p.outputs.size(); o++) {
                BlockBits b = block_bits(p, r, o);
                BlockError e = classify_block(b.x, b.z);
                if (e.x_logical || e.z_logical || (!allow_single && (e.x_detected || e.z_detected))) {
                    return false;
                }
            }
            return true;
        };
        size_t nb = blocks.size();
        // At most one error in total over the input blocks.
        for (size_t k = 0; k < nb; k++) {
            for (BlockBits in : inputs) {
                if (k > 0 && in.x == 0 && in.z == 0) {
                    continue;
                }
                SimOptions o = base;
                add_block_input(o.input, blocks[k], in);
                SimOutcome r = simulate(p, {}, o);
                p5.check(all_ok(r, true),
                         [&] { return name + "block " + std::to_string(k) + " input " + bits_str(in); });
            }
        }
        for (size_t k = 0; k < nb; k++) {
            for (int j = 0; j < 7; j++) {
                for (int pauli = 1; pauli <= 2; pauli++) {
                    SimOptions o = base;
                    o.input.push_back({blocks[k][j], uint8_t(pauli == 1), uint8_t(pauli == 2)});
                    SimOutcome r = simulate(p, {}, o);
                    bool y = false;
                    for (size_t q = 0; q < r.frame_x.size(); q++) {
                        y |= r.frame_x[q] && r.frame_z[q];
                    }
                    noy.check(!y, [&] {
                        return name + "block " + std::to_string(k) + " qubit " + std::to_string(j + 1) +
                               (pauli == 1 ? " X" : " Z");
                    });
                }
            }
        }
        for_each_single_fault(p, &mask, [&](int s, uint8_t code) {
            SimOutcome r = simulate(p, {{s, code}}, base);
            p6.check(all_ok(r, true), [&] { return name + fault_str(p, s, code); });
        });
    }
    out.push_back(p5.r);
    out.push_back(p6.r);
    out.push_back(noy.r);
}

void meas_properties(Mode mode, const std::string &dir, std::vector<PropertyResult> &out) {
    std::string tag = std::string(mode_name(mode)) + " ";
    Sweep p7(tag + "7: fault-free measurement of a single-error input is correct");
    Sweep p8(tag + "8: one-fault measurement of a clean input is correct");
    auto inputs = weight_le1_errors();
    for (int type : {13, 14}) {
        ExRec ex = build_exrec(type, mode, dir);
        const Program &p = ex.program;
        auto mask = region_mask(p, {Region::GA});
        auto data = syndrome_data(p, "LA.s1");
        SimOptions base;
        base.site_enabled = &mask;
        std::string name = "exrec " + std::to_string(type) + " ";
        auto correct = [&](const SimOutcome &r) {
            return !output_wrong(p.outputs.at(0).kind, r.output_meas.at(0), 0);
        };
        for (BlockBits in : inputs) {
            SimOptions o = base;
            add_block_input(o.input, data, in);
            p7.check(correct(simulate(p, {}, o)), [&] { return name + "input " + bits_str(in); });
        }
        for_each_single_fault(p, &mask, [&](int s, uint8_t code) {
            p8.check(correct(simulate(p, {{s, code}}, base)), [&] { return name + fault_str(p, s, code); });
        });
    }
    out.push_back(p7.r);
    out.push_back(p8.r);
}

void prep_properties(Mode mode, const std::string &dir, std::vector<PropertyResult> &out) {
    std::string tag = std::string(mode_name(mode)) + " ";
    Sweep p9(tag + "9: one-fault preparation leaves at most one error");
    for (int type : {11, 12}) {
        ExRec ex = build_exrec(type, mode, dir);
        const Program &p = ex.program;
        auto mask =
            region_mask(p, {Region::GA, Region::PREP_ATTEMPT_1, Region::PREP_ATTEMPT_2, Region::PREP_ATTEMPT_3});
        SimOptions base;
        base.site_enabled = &mask;
        std::string name = "exrec " + std::to_string(type) + " ";
        OutputKind kind = p.outputs.at(0).kind;
        auto ok = [&](const SimOutcome &r) {
            BlockBits b = block_bits(p, r, 0);
            BlockError e = classify_block(b.x, b.z);
            // Logical Z stabilizes |0>, logical X stabilizes |+>.
            bool bad = kind == OutputKind::ZERO ? e.x_logical : kind == OutputKind::PLUS ? e.z_logical
                                                                                        : e.x_logical || e.z_logical;
            return !r.ec_failure && !bad;
        };
        p9.check(ok(simulate(p, {}, base)), [&] { return name + "fault-free"; });
        for_each_single_fault(p, &mask, [&](int s, uint8_t code) {
            p9.check(ok(simulate(p, {{s, code}}, base)), [&] { return name + fault_str(p, s, code); });
        });
    }
    out.push_back(p9.r);
}

}  // namespace

std::vector<PropertyResult> ft_sweeps(Mode mode, const std::string &dir) {
    std::vector<PropertyResult> out;
    ec_properties(mode, dir, out);
    ga_properties(mode, dir, out);
    meas_properties(mode, dir, out);
    prep_properties(mode, dir, out);
    Sweep single(std::string(mode_name(mode)) + " exRec: every single fault is benign");
    for (int type = 0; type < NUM_LOCATION_TYPES; type++) {
        ExRec ex = build_exrec(type, mode, dir);
        const Program &p = ex.program;
        for_each_single_fault(p, nullptr, [&](int s, uint8_t code) {
            Verdict v = is_malignant(p, {{s, code}});
            single.check(v == Verdict::BENIGN, [&] {
                return "exrec " + std::to_string(type) + " " + fault_str(p, s, code) + " " + verdict_name(v);
            });
        });
    }
    out.push_back(single.r);
    return out;
}

}  // namespace latticeft
