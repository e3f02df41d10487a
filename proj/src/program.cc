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

#include "latticeft/program.h"

#include <algorithm>
#include <numeric>

namespace latticeft {

int Program::qubit(const QubitAddress &q) const {
    auto it = qubit_index.find(q);
    if (it == qubit_index.end()) {
        throw std::out_of_range("address " + address_str(q) + " is not used by the circuit");
    }
    return it->second;
}

int Program::meas_site(const QubitAddress &q, int step) const {
    for (size_t s = 0; s < sites.size(); s++) {
        const Site &x = sites[s];
        if (x.step == step && location_type(x.type).category == Category::MEAS && x.qubits[0] == q) {
            return static_cast<int>(s);
        }
    }
    return -1;
}

Program compile(const Circuit &c) {
    Program p;
    p.circuit = c;
    auto add_qubit = [&](const QubitAddress &q) {
        if (!p.qubit_index.count(q)) {
            p.qubit_index[q] = static_cast<int>(p.addresses.size());
            p.addresses.push_back(q);
        }
    };
    for (const auto &[q, r] : c.roles) {
        add_qubit(q);
    }
    for (const auto &l : c.locations) {
        for (int k = 0; k < l.num_qubits; k++) {
            add_qubit(l.qubits[k]);
        }
    }
    for (const auto &o : c.outputs) {
        for (const auto &q : o.qubits) {
            add_qubit(q);
        }
    }
    for (const auto &s : c.syndromes) {
        for (const auto &q : s.data) {
            add_qubit(q);
        }
    }

    p.sites = merge_sites(c);
    p.site_of_line.assign(c.locations.size(), -1);
    for (size_t s = 0; s < p.sites.size(); s++) {
        for (int line : p.sites[s].lines) {
            p.site_of_line[line] = static_cast<int>(s);
        }
    }

    std::vector<int> order(c.locations.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return c.locations[a].step < c.locations[b].step; });
    for (int line : order) {
        const Location &l = c.locations[line];
        int q0 = p.qubit(l.qubits[0]);
        int q1 = l.num_qubits > 1 ? p.qubit(l.qubits[1]) : -1;
        if (p.steps.empty() || p.steps.back() != l.step) {
            p.steps.push_back(l.step);
            p.step_begin.push_back(static_cast<int>(p.ops.size()));
        }
        p.ops.push_back({line, p.site_of_line[line], l.type, l.step, q0, q1});
    }
    p.step_begin.push_back(static_cast<int>(p.ops.size()));

    p.paths = enumerate_paths(c);
    std::vector<int> structural_pos(c.branchpoints.size(), -1);
    for (size_t k = 0; k < p.paths.structural.size(); k++) {
        structural_pos[p.paths.structural[k]] = static_cast<int>(k);
    }

    auto require_meas = [&](const QubitAddress &q, int step, const std::string &what) {
        int s = p.meas_site(q, step);
        if (s < 0) {
            throw std::runtime_error(what + ": no measurement of " + address_str(q) + " at step " +
                                     std::to_string(step));
        }
        return s;
    };
    for (size_t b = 0; b < c.branchpoints.size(); b++) {
        const Branchpoint &bp = c.branchpoints[b];
        Program::BranchInfo info{bp.step, {}, structural_pos[b]};
        for (int k = 0; k < 3; k++) {
            info.meas_site[k] = require_meas(bp.qubits[k], bp.step, "branchpoint " + bp.name);
        }
        p.branches.push_back(info);
    }
    for (const auto &s : c.syndromes) {
        Program::SyndromeInfo info{s.step, s.correct, {}, {}};
        for (int k = 0; k < 7; k++) {
            info.anc_site[k] = require_meas(s.anc[k], s.step, "syndrome " + s.name);
            info.data_qubit[k] = p.qubit(s.data[k]);
        }
        p.syndromes.push_back(info);
    }
    for (const auto &o : c.outputs) {
        Program::OutputInfo info{o.kind, {}, {}};
        for (int k = 0; k < 7; k++) {
            info.qubit[k] = p.qubit(o.qubits[k]);
            info.meas_site[k] = -1;
            if (o.kind == OutputKind::XMEAS || o.kind == OutputKind::ZMEAS) {
                info.meas_site[k] = require_meas(o.qubits[k], o.step, "output");
            }
        }
        p.outputs.push_back(info);
    }

    for (const auto &path : p.paths.paths) {
        std::vector<uint8_t> active(p.sites.size(), 0);
        for (size_t line = 0; line < c.locations.size(); line++) {
            if (path.active_lines[line]) {
                active[p.site_of_line[line]] = 1;
            }
        }
        p.site_active.push_back(std::move(active));
        std::vector<uint8_t> syn(c.syndromes.size(), 0);
        for (size_t k = 0; k < c.syndromes.size(); k++) {
            syn[k] = conds_hold(c.syndromes[k].conds, path.pass);
        }
        p.syndrome_active.push_back(std::move(syn));
    }
    return p;
}

const std::vector<uint8_t> &fault_alphabet(int type) {
    static const std::vector<uint8_t> two = [] {
        std::vector<uint8_t> v;
        for (uint8_t k = 1; k < 16; k++) {
            v.push_back(k);
        }
        return v;
    }();
    static const std::vector<uint8_t> one = {1, 2, 3};
    static const std::vector<uint8_t> flip_x = {1};
    static const std::vector<uint8_t> flip_z = {2};
    const LocationType &t = location_type(type);
    switch (t.category) {
        case Category::TWO_QUBIT_GATE:
        case Category::SWAP:
            return two;
        case Category::ONE_QUBIT_GATE:
        case Category::WAIT:
            return one;
        case Category::PREP:
            // |0> is flipped by X, |+> by Z.
            return t.basis == 'Z' ? flip_x : flip_z;
        case Category::MEAS:
            return flip_x;
    }
    return one;
}

}  // namespace latticeft
