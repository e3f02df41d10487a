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

#include "latticeft/census.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "latticeft/steane.h"

namespace latticeft {

MalignancyMatrix &MalignancyMatrix::operator+=(const MalignancyMatrix &other) {
    for (int i = 0; i < NUM_LOCATION_TYPES; i++) {
        for (int j = i; j < NUM_LOCATION_TYPES; j++) {
            alpha[i][j] += other.alpha[i][j];
        }
    }
    return *this;
}

MalignancyMatrix MalignancyMatrix::scaled(double kappa) const {
    MalignancyMatrix r = *this;
    for (int i = 0; i < NUM_LOCATION_TYPES; i++) {
        for (int j = i; j < NUM_LOCATION_TYPES; j++) {
            r.alpha[i][j] = static_cast<uint64_t>(std::llround(alpha[i][j] * kappa));
        }
    }
    return r;
}

uint64_t MalignancyMatrix::total() const {
    uint64_t t = 0;
    for (int i = 0; i < NUM_LOCATION_TYPES; i++) {
        for (int j = i; j < NUM_LOCATION_TYPES; j++) {
            t += alpha[i][j];
        }
    }
    return t;
}

bool MalignancyMatrix::operator==(const MalignancyMatrix &other) const {
    for (int i = 0; i < NUM_LOCATION_TYPES; i++) {
        for (int j = i; j < NUM_LOCATION_TYPES; j++) {
            if (alpha[i][j] != other.alpha[i][j]) {
                return false;
            }
        }
    }
    return exrec == other.exrec && mode == other.mode;
}

std::string format_matrix(const MalignancyMatrix &m) {
    std::ostringstream out;
    out << "exrec " << m.exrec << " mode " << mode_name(m.mode) << "\n";
    for (int i = 0; i < NUM_LOCATION_TYPES; i++) {
        for (int j = i; j < NUM_LOCATION_TYPES; j++) {
            out << (j == i ? "" : " ") << m.alpha[i][j];
        }
        out << "\n";
    }
    return out.str();
}

MalignancyMatrix parse_matrix(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    MalignancyMatrix m;
    int row = -1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') {
            continue;
        }
        std::istringstream ls(line);
        if (row < 0) {
            std::string w1, w3, mode;
            int ex;
            if (!(ls >> w1 >> ex >> w3 >> mode) || w1 != "exrec" || w3 != "mode") {
                throw std::runtime_error("matrix header must be 'exrec <type> mode <local|nonlocal>'");
            }
            if (ex < 0 || ex >= NUM_LOCATION_TYPES) {
                throw std::runtime_error("matrix exrec type out of range");
            }
            m.exrec = ex;
            m.mode = parse_mode(mode);
            row = 0;
            continue;
        }
        if (row >= NUM_LOCATION_TYPES) {
            throw std::runtime_error("matrix has more than 17 rows");
        }
        std::vector<uint64_t> vals;
        std::string tok;
        while (ls >> tok) {
            char *end = nullptr;
            unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
            if (*end != 0 || tok[0] == '-') {
                throw std::runtime_error("matrix entry '" + tok + "' is not a nonnegative integer");
            }
            vals.push_back(v);
        }
        if ((int)vals.size() != NUM_LOCATION_TYPES - row) {
            throw std::runtime_error("matrix row " + std::to_string(row) + " has " + std::to_string(vals.size()) +
                                     " entries, expected " + std::to_string(NUM_LOCATION_TYPES - row));
        }
        for (size_t k = 0; k < vals.size(); k++) {
            m.alpha[row][row + k] = vals[k];
        }
        row++;
    }
    if (row != NUM_LOCATION_TYPES) {
        throw std::runtime_error("matrix has " + std::to_string(std::max(row, 0)) + " rows, expected 17");
    }
    return m;
}

void write_matrix(const MalignancyMatrix &m, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << format_matrix(m);
}

MalignancyMatrix read_matrix(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open matrix '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

std::string check_matrix_bounds(const MalignancyMatrix &m, const std::array<int, NUM_LOCATION_TYPES> &counts) {
    for (int i = 0; i < NUM_LOCATION_TYPES; i++) {
        for (int j = i; j < NUM_LOCATION_TYPES; j++) {
            uint64_t ni = counts[i], nj = counts[j];
            uint64_t cap = i == j ? ni * (ni - (ni > 0)) / 2 : ni * nj;
            if (m.alpha[i][j] > cap) {
                return "alpha[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                       std::to_string(m.alpha[i][j]) + " exceeds " + std::to_string(cap);
            }
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// Signature table.

namespace {

inline bool get_bit(const uint64_t *v, int k) {
    return (v[k >> 6] >> (k & 63)) & 1;
}

inline void set_bit(uint64_t *v, int k) {
    v[k >> 6] |= uint64_t{1} << (k & 63);
}

}  // namespace

SignatureTable::SignatureTable(const Program &p, const simd::Kernels &kernels) : p_(p), k_(kernels) {
    size_t ns = p.num_sites();
    obs_of_site_.assign(ns, -1);
    for (size_t s = 0; s < ns; s++) {
        if (location_type(p.sites[s].type).category == Category::MEAS) {
            obs_of_site_[s] = static_cast<int>(num_obs_++);
        }
    }
    for (const auto &o : p.outputs) {
        std::array<int, 7> xo{}, zo{};
        for (int k = 0; k < 7; k++) {
            if (o.kind == OutputKind::XMEAS || o.kind == OutputKind::ZMEAS) {
                xo[k] = obs_of_site_[o.meas_site[k]];
                zo[k] = -1;
            } else {
                xo[k] = static_cast<int>(num_obs_++);
                zo[k] = static_cast<int>(num_obs_++);
            }
        }
        out_x_obs_.push_back(xo);
        out_z_obs_.push_back(zo);
    }
    words_ = simd::round_up_words(std::max<size_t>(num_obs_, 1));
    const size_t W = words_;
    size_t nq = p.num_qubits();
    size_t npaths = p.paths.paths.size();

    base_.assign(npaths, std::vector<int64_t>(ns, -1));
    corr_.assign(npaths, std::vector<int64_t>(p.syndromes.size() * 7, -1));
    events_.resize(npaths);

    // Reserve pool slots: every active site gets |alphabet| signatures per path.
    size_t slots = 0;
    for (size_t path = 0; path < npaths; path++) {
        for (size_t s = 0; s < ns; s++) {
            if (p.site_active[path][s]) {
                base_[path][s] = static_cast<int64_t>(slots);
                slots += fault_alphabet(p.sites[s].type).size();
            }
        }
        for (size_t y = 0; y < p.syndromes.size(); y++) {
            if (p.syndrome_active[path][y]) {
                for (int j = 0; j < 7; j++) {
                    corr_[path][y * 7 + j] = static_cast<int64_t>(slots++);
                }
            }
        }
    }
    pool_.assign(slots * W, 0);

    std::vector<uint64_t> sens(2 * nq * W);
    auto sx = [&](int q) { return &sens[(2 * size_t(q)) * W]; };
    auto sz = [&](int q) { return &sens[(2 * size_t(q) + 1) * W]; };
    std::vector<uint64_t> tmp(4 * W);

    for (size_t path = 0; path < npaths; path++) {
        std::fill(sens.begin(), sens.end(), 0);
        const auto &active = p.paths.paths[path].active_lines;
        for (size_t o = 0; o < p.outputs.size(); o++) {
            if (out_z_obs_[o][0] < 0) {
                continue;
            }
            for (int k = 0; k < 7; k++) {
                set_bit(sx(p.outputs[o].qubit[k]), out_x_obs_[o][k]);
                set_bit(sz(p.outputs[o].qubit[k]), out_z_obs_[o][k]);
            }
        }
        for (size_t si = p.steps.size(); si-- > 0;) {
            int step = p.steps[si];
            for (size_t y = 0; y < p.syndromes.size(); y++) {
                const auto &info = p.syndromes[y];
                if (info.step != step || !p.syndrome_active[path][y]) {
                    continue;
                }
                for (int j = 0; j < 7; j++) {
                    int q = info.data_qubit[j];
                    uint64_t *dst = &pool_[corr_[path][y * 7 + j] * W];
                    std::memcpy(dst, info.correct == 'X' ? sx(q) : sz(q), W * sizeof(uint64_t));
                }
            }
            for (int k = p.step_begin[si]; k < p.step_begin[si + 1]; k++) {
                const Program::Op &op = p.ops[k];
                if (!active[op.line]) {
                    continue;
                }
                const LocationType &t = location_type(op.type);
                const auto &alphabet = fault_alphabet(op.type);
                uint64_t *out = &pool_[base_[path][op.site] * W];
                int a = op.q0, b = op.q1;
                if (t.category == Category::MEAS) {
                    set_bit(out, obs_of_site_[op.site]);
                    std::fill(sx(a), sx(a) + W, 0);
                    std::fill(sz(a), sz(a) + W, 0);
                    set_bit(t.basis == 'X' ? sz(a) : sx(a), obs_of_site_[op.site]);
                    continue;
                }
                for (size_t ai = 0; ai < alphabet.size(); ai++) {
                    uint8_t code = alphabet[ai];
                    uint64_t *dst = out + ai * W;
                    if (code & 1) {
                        k_.xor_into(dst, sx(a), W);
                    }
                    if (code & 2) {
                        k_.xor_into(dst, sz(a), W);
                    }
                    if (code & 4) {
                        k_.xor_into(dst, sx(b), W);
                    }
                    if (code & 8) {
                        k_.xor_into(dst, sz(b), W);
                    }
                }
                if (t.category == Category::PREP) {
                    std::fill(sx(a), sx(a) + W, 0);
                    std::fill(sz(a), sz(a) + W, 0);
                    continue;
                }
                if (t.gate == GateKind::IDENTITY) {
                    continue;
                }
                // Sensitivity before the gate of basis Pauli e is the XOR of the
                // sensitivities after the gate over the components of G e G^dag.
                uint64_t *olds[4] = {sx(a), sz(a), b >= 0 ? sx(b) : nullptr, b >= 0 ? sz(b) : nullptr};
                int nb = b >= 0 ? 4 : 2;
                for (int e = 0; e < nb; e++) {
                    uint8_t v[4] = {0, 0, 0, 0};
                    v[e] = 1;
                    conjugate_bits(t.gate, v[0], v[1], v[2], v[3]);
                    uint64_t *dst = &tmp[e * W];
                    std::fill(dst, dst + W, 0);
                    for (int f = 0; f < nb; f++) {
                        if (v[f]) {
                            k_.xor_into(dst, olds[f], W);
                        }
                    }
                }
                for (int e = 0; e < nb; e++) {
                    std::memcpy(olds[e], &tmp[e * W], W * sizeof(uint64_t));
                }
            }
        }

        // Branch and syndrome events along this path.
        auto &ev = events_[path];
        for (size_t bi = 0; bi < p.branches.size(); bi++) {
            bool all = true;
            for (int s : p.branches[bi].meas_site) {
                all &= p.site_active[path][s] != 0;
            }
            if (all) {
                ev.push_back({p.branches[bi].step, true, static_cast<int>(bi)});
            }
        }
        for (size_t y = 0; y < p.syndromes.size(); y++) {
            if (p.syndrome_active[path][y]) {
                ev.push_back({p.syndromes[y].step, false, static_cast<int>(y)});
            }
        }
        std::stable_sort(ev.begin(), ev.end(), [](const Event &x, const Event &y) {
            if (x.step != y.step) {
                return x.step < y.step;
            }
            return x.is_branch > y.is_branch;
        });
    }

    // Alphabet entries whose signatures agree on every path are interchangeable.
    reps_.resize(ns);
    for (size_t s = 0; s < ns; s++) {
        const auto &alphabet = fault_alphabet(p.sites[s].type);
        std::map<std::vector<uint64_t>, int> seen;
        for (size_t ai = 0; ai < alphabet.size(); ai++) {
            std::vector<uint64_t> key;
            for (size_t path = 0; path < npaths; path++) {
                if (base_[path][s] < 0) {
                    continue;
                }
                const uint64_t *sig = &pool_[(base_[path][s] + ai) * W];
                key.insert(key.end(), sig, sig + W);
            }
            if (seen.emplace(key, static_cast<int>(ai)).second) {
                reps_[s].push_back(static_cast<int>(ai));
            }
        }
    }
}

const uint64_t *SignatureTable::signature(int path, int s, int a) const {
    int64_t b = base_[path][s];
    if (b < 0) {
        return nullptr;
    }
    return &pool_[(b + a) * words_];
}

Verdict SignatureTable::finish(uint64_t *sig) const {
    for (size_t o = 0; o < p_.outputs.size(); o++) {
        uint8_t xb = 0, zb = 0;
        for (int k = 0; k < 7; k++) {
            xb |= uint8_t(get_bit(sig, out_x_obs_[o][k])) << k;
            if (out_z_obs_[o][k] >= 0) {
                zb |= uint8_t(get_bit(sig, out_z_obs_[o][k])) << k;
            }
        }
        if (output_wrong(p_.outputs[o].kind, xb, zb)) {
            return Verdict::MALIGNANT;
        }
    }
    return Verdict::BENIGN;
}

Verdict SignatureTable::evaluate(int s1, int a1, int s2, int a2, uint64_t *path_switches) const {
    const size_t W = words_;
    const auto &structural = p_.paths.structural;
    const uint32_t all_pass = (uint32_t{1} << structural.size()) - 1;
    uint32_t assign = all_pass;
    uint64_t sig[64];
    uint64_t *v = W <= 64 ? sig : nullptr;
    std::vector<uint64_t> big;
    if (v == nullptr) {
        big.resize(W);
        v = big.data();
    }
    const auto &table = steane_decode_table();
    std::vector<int8_t> branch(p_.branches.size());
    for (int round = 0; round < 256; round++) {
        int path = p_.paths.path_of_assignment[assign];
        const uint64_t *g1 = s1 >= 0 ? signature(path, s1, a1) : nullptr;
        const uint64_t *g2 = s2 >= 0 ? signature(path, s2, a2) : nullptr;
        if (g1 && g2) {
            k_.xor_to(v, g1, g2, W);
        } else if (g1) {
            std::memcpy(v, g1, W * sizeof(uint64_t));
        } else if (g2) {
            std::memcpy(v, g2, W * sizeof(uint64_t));
        } else {
            std::fill(v, v + W, 0);
        }
        std::fill(branch.begin(), branch.end(), -1);
        bool restart = false;
        for (const Event &e : events_[path]) {
            if (e.is_branch) {
                const auto &info = p_.branches[e.index];
                int parity = 0;
                for (int s : info.meas_site) {
                    parity ^= get_bit(v, obs_of_site_[s]);
                }
                int8_t pass = parity == 0;
                branch[e.index] = pass;
                int pos = info.structural_pos;
                if (pos >= 0 && ((assign >> pos) & 1) != uint32_t(pass)) {
                    // Take the other branch and reset every later decision to pass.
                    uint32_t keep = (uint32_t{1} << pos) - 1;
                    assign = (assign & keep) | (all_pass & ~keep);
                    if (!pass) {
                        assign &= ~(uint32_t{1} << pos);
                    }
                    restart = true;
                    if (path_switches) {
                        (*path_switches)++;
                    }
                    break;
                }
            } else {
                const auto &info = p_.syndromes[e.index];
                uint32_t m = 0;
                for (int j = 0; j < 7; j++) {
                    m |= uint32_t(get_bit(v, obs_of_site_[info.anc_site[j]])) << j;
                }
                int q = table[m].flip_qubit;
                if (q >= 0) {
                    k_.xor_into(v, &pool_[corr_[path][e.index * 7 + q] * W], W);
                }
            }
        }
        if (restart) {
            continue;
        }
        for (const auto &ec : p_.circuit.ecs) {
            if (ec_failed(ec, branch)) {
                return Verdict::EC_FAILURE;
            }
        }
        return finish(v);
    }
    throw std::logic_error("branch resolution did not converge");
}

Verdict SignatureTable::evaluate_single(int s, int a) const {
    return evaluate(s, a, -1, 0);
}

namespace {

std::vector<int> restricted_reps(const SignatureTable &t, const Program &p, int s,
                                 const std::vector<uint8_t> &two_qubit_alphabet) {
    const auto &reps = t.representatives(s);
    if (two_qubit_alphabet.empty() || fault_alphabet(p.sites[s].type).size() != 15) {
        return reps;
    }
    // Restricting the alphabet can split classes, so fall back to all allowed entries.
    std::vector<int> out;
    const auto &alphabet = fault_alphabet(p.sites[s].type);
    for (size_t ai = 0; ai < alphabet.size(); ai++) {
        if (std::find(two_qubit_alphabet.begin(), two_qubit_alphabet.end(), alphabet[ai]) != two_qubit_alphabet.end()) {
            out.push_back(static_cast<int>(ai));
        }
    }
    return out;
}

}  // namespace

MalignancyMatrix census_pairs(const Program &p, const CensusOptions &opts, CensusStats *stats) {
    const simd::Kernels &k = opts.kernels ? *opts.kernels : simd::active_kernels();
    SignatureTable table(p, k);
    int ns = static_cast<int>(p.num_sites());
    if (opts.max_sites >= 0) {
        ns = std::min(ns, opts.max_sites);
    }
    std::vector<std::vector<int>> reps(ns);
    for (int s = 0; s < ns; s++) {
        reps[s] = restricted_reps(table, p, s, opts.two_qubit_alphabet);
    }
    int workers = std::max(1, opts.workers);
    std::vector<MalignancyMatrix> partial(workers);
    std::vector<CensusStats> part_stats(workers);
    auto run = [&](int w) {
        MalignancyMatrix &m = partial[w];
        CensusStats &st = part_stats[w];
        for (int s1 = w; s1 < ns; s1 += workers) {
            for (int s2 = s1 + 1; s2 < ns; s2++) {
                st.pairs++;
                bool malignant = false, ec_fail = false;
                for (int a1 : reps[s1]) {
                    for (int a2 : reps[s2]) {
                        st.evaluations++;
                        Verdict v = table.evaluate(s1, a1, s2, a2, &st.path_switches);
                        if (v == Verdict::MALIGNANT) {
                            malignant = true;
                            break;
                        }
                        ec_fail |= v == Verdict::EC_FAILURE;
                    }
                    if (malignant) {
                        break;
                    }
                }
                if (malignant) {
                    m.add(p.sites[s1].type, p.sites[s2].type);
                } else if (ec_fail) {
                    st.ec_failure_pairs++;
                }
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; w++) {
            threads.emplace_back(run, w);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    MalignancyMatrix total;
    total.exrec = p.circuit.exrec;
    total.mode = p.circuit.mode;
    CensusStats st;
    for (int w = 0; w < workers; w++) {
        total += partial[w];
        st.pairs += part_stats[w].pairs;
        st.evaluations += part_stats[w].evaluations;
        st.path_switches += part_stats[w].path_switches;
        st.ec_failure_pairs += part_stats[w].ec_failure_pairs;
    }
    if (stats) {
        *stats = st;
    }
    return total;
}

MalignancyMatrix census_pairs_oracle(const Program &p, int max_sites, const std::vector<uint8_t> &two_qubit_alphabet) {
    int ns = static_cast<int>(p.num_sites());
    if (max_sites >= 0) {
        ns = std::min(ns, max_sites);
    }
    auto alphabet_of = [&](int s) {
        std::vector<uint8_t> a = fault_alphabet(p.sites[s].type);
        if (!two_qubit_alphabet.empty() && a.size() == 15) {
            std::vector<uint8_t> r;
            for (uint8_t code : a) {
                if (std::find(two_qubit_alphabet.begin(), two_qubit_alphabet.end(), code) != two_qubit_alphabet.end()) {
                    r.push_back(code);
                }
            }
            return r;
        }
        return a;
    };
    MalignancyMatrix m;
    m.exrec = p.circuit.exrec;
    m.mode = p.circuit.mode;
    for (int s1 = 0; s1 < ns; s1++) {
        for (int s2 = s1 + 1; s2 < ns; s2++) {
            bool malignant = false;
            for (uint8_t c1 : alphabet_of(s1)) {
                for (uint8_t c2 : alphabet_of(s2)) {
                    if (is_malignant(p, {{s1, c1}, {s2, c2}}) == Verdict::MALIGNANT) {
                        malignant = true;
                        break;
                    }
                }
                if (malignant) {
                    break;
                }
            }
            if (malignant) {
                m.add(p.sites[s1].type, p.sites[s2].type);
            }
        }
    }
    return m;
}

uint64_t census_single_malignant(const Program &p) {
    uint64_t n = 0;
    for (size_t s = 0; s < p.num_sites(); s++) {
        for (uint8_t code : fault_alphabet(p.sites[s].type)) {
            if (is_malignant(p, {{static_cast<int>(s), code}}) == Verdict::MALIGNANT) {
                n++;
            }
        }
    }
    return n;
}

BadLocationCount census_badloc(const Program &gv, int bp) {
    if (bp < 0 || bp >= (int)gv.branches.size()) {
        throw std::invalid_argument("census_badloc: circuit has no such branchpoint");
    }
    BadLocationCount counts{};
    for (size_t s = 0; s < gv.num_sites(); s++) {
        for (uint8_t code : fault_alphabet(gv.sites[s].type)) {
            SimOutcome out = simulate(gv, {{static_cast<int>(s), code}});
            if (out.branch[bp] == 0) {
                counts[gv.sites[s].type]++;
                break;
            }
        }
    }
    return counts;
}

std::string format_badloc(const BadLocationCount &b) {
    std::ostringstream out;
    out << "# type count\n";
    for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
        if (b[t]) {
            out << t << " " << b[t] << "\n";
        }
    }
    return out.str();
}

BadLocationCount parse_badloc(const std::string &text) {
    BadLocationCount b{};
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t f = line.find_first_not_of(" \t\r");
        if (f == std::string::npos || line[f] == '#') {
            continue;
        }
        std::istringstream ls(line);
        int t, c;
        if (!(ls >> t >> c) || t < 0 || t >= NUM_LOCATION_TYPES || c < 0) {
            throw std::runtime_error("malformed bad-location line '" + line + "'");
        }
        b[t] = c;
    }
    return b;
}

BadLocationCount read_badloc(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_badloc(buf.str());
}

}  // namespace latticeft
