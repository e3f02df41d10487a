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

#include "latticeft/engine.h"

#include <stdexcept>

#include "latticeft/steane.h"

namespace latticeft {

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::BENIGN:
            return "benign";
        case Verdict::MALIGNANT:
            return "malignant";
        case Verdict::EC_FAILURE:
            return "ec_failure";
    }
    return "?";
}

bool ec_failed(const EcDecl &e, const std::vector<int8_t> &branch) {
    bool f0 = branch[e.bps[0]] == 0;
    bool f1 = branch[e.bps[1]] == 0;
    bool f2 = branch[e.bps[2]] == 0;
    return (f0 && f1) || ((f0 || f1) && f2);
}

bool output_wrong(OutputKind kind, uint8_t x_bits, uint8_t z_bits) {
    const auto &table = steane_decode_table();
    bool lx = table[x_bits & 0x7F].logical;
    bool lz = table[z_bits & 0x7F].logical;
    switch (kind) {
        case OutputKind::ANY:
            return lx || lz;
        case OutputKind::ZERO:
            return lx;
        case OutputKind::PLUS:
            return lz;
        case OutputKind::XMEAS:
        case OutputKind::ZMEAS:
            return lx;
    }
    return true;
}

SimOutcome simulate(const Program &p, const FaultAssignment &fa, const SimOptions &opts) {
    const Circuit &c = p.circuit;
    size_t n = p.num_qubits();
    std::vector<uint8_t> fx(n, 0), fz(n, 0);
    std::vector<uint8_t> fault_at(p.num_sites(), 0);
    for (const Fault &f : fa) {
        if (f.site < 0 || f.site >= (int)p.num_sites()) {
            throw std::out_of_range("fault on nonexistent site " + std::to_string(f.site));
        }
        fault_at[f.site] = f.pauli;
    }
    SimOutcome out;
    out.meas_flip.assign(p.num_sites(), -1);
    out.branch.assign(c.branchpoints.size(), -1);
    std::vector<uint8_t> pass(c.branchpoints.size(), 1);

    auto inject = [&]() {
        for (const auto &e : opts.input) {
            fx[e.qubit] ^= e.x;
            fz[e.qubit] ^= e.z;
        }
    };
    bool injected = false;
    if (p.steps.empty() || opts.input_after_step < p.steps.front()) {
        inject();
        injected = true;
    }

    for (size_t si = 0; si < p.steps.size(); si++) {
        int step = p.steps[si];
        for (int k = p.step_begin[si]; k < p.step_begin[si + 1]; k++) {
            const Program::Op &op = p.ops[k];
            if (opts.site_enabled != nullptr && !(*opts.site_enabled)[op.site]) {
                continue;
            }
            if (!conds_hold(c.locations[op.line].conds, pass)) {
                continue;
            }
            const LocationType &t = location_type(op.type);
            uint8_t f = fault_at[op.site];
            switch (t.category) {
                case Category::PREP:
                    fx[op.q0] = 0;
                    fz[op.q0] = 0;
                    fx[op.q0] ^= f & 1;
                    fz[op.q0] ^= (f >> 1) & 1;
                    break;
                case Category::MEAS: {
                    uint8_t bit = t.basis == 'X' ? fz[op.q0] : fx[op.q0];
                    out.meas_flip[op.site] = static_cast<int8_t>(bit ^ (f & 1));
                    fx[op.q0] = 0;
                    fz[op.q0] = 0;
                    break;
                }
                default: {
                    uint8_t dummy_x = 0, dummy_z = 0;
                    uint8_t &xb = op.q1 >= 0 ? fx[op.q1] : dummy_x;
                    uint8_t &zb = op.q1 >= 0 ? fz[op.q1] : dummy_z;
                    conjugate_bits(t.gate, fx[op.q0], fz[op.q0], xb, zb);
                    fx[op.q0] ^= f & 1;
                    fz[op.q0] ^= (f >> 1) & 1;
                    if (op.q1 >= 0) {
                        fx[op.q1] ^= (f >> 2) & 1;
                        fz[op.q1] ^= (f >> 3) & 1;
                    }
                    break;
                }
            }
        }
        if (!injected && opts.input_after_step <= step) {
            inject();
            injected = true;
        }
        for (size_t b = 0; b < p.branches.size(); b++) {
            const auto &info = p.branches[b];
            if (info.step != step) {
                continue;
            }
            int parity = 0;
            bool evaluated = true;
            for (int s : info.meas_site) {
                if (out.meas_flip[s] < 0) {
                    evaluated = false;
                } else {
                    parity ^= out.meas_flip[s];
                }
            }
            if (evaluated) {
                out.branch[b] = static_cast<int8_t>(parity == 0);
                pass[b] = parity == 0;
            }
        }
        for (size_t k = 0; k < p.syndromes.size(); k++) {
            const auto &info = p.syndromes[k];
            if (info.step != step || !conds_hold(c.syndromes[k].conds, pass)) {
                continue;
            }
            uint32_t m = 0;
            bool complete = true;
            for (int j = 0; j < 7; j++) {
                int8_t v = out.meas_flip[info.anc_site[j]];
                if (v < 0) {
                    complete = false;
                    break;
                }
                m |= uint32_t(v) << j;
            }
            if (!complete) {
                continue;
            }
            int q = steane_decode_table()[m].flip_qubit;
            if (q >= 0) {
                int d = info.data_qubit[q];
                if (info.correct == 'X') {
                    fx[d] ^= 1;
                } else {
                    fz[d] ^= 1;
                }
            }
        }
    }
    if (!injected) {
        inject();
    }

    for (const auto &o : p.outputs) {
        PauliMask frame(7);
        uint8_t meas = 0;
        for (int k = 0; k < 7; k++) {
            frame.set_x(k, fx[o.qubit[k]]);
            frame.set_z(k, fz[o.qubit[k]]);
            if (o.meas_site[k] >= 0) {
                int8_t v = out.meas_flip[o.meas_site[k]];
                meas |= uint8_t((v > 0) ? 1 : 0) << k;
            }
        }
        out.output_frames.push_back(frame);
        out.output_meas.push_back(meas);
    }
    for (const auto &e : c.ecs) {
        out.ec_failure |= ec_failed(e, out.branch);
    }
    out.frame_x = std::move(fx);
    out.frame_z = std::move(fz);
    return out;
}

Verdict judge(const Program &p, const SimOutcome &out) {
    if (out.ec_failure) {
        return Verdict::EC_FAILURE;
    }
    for (size_t k = 0; k < p.outputs.size(); k++) {
        const auto &o = p.outputs[k];
        uint8_t xb, zb;
        if (o.kind == OutputKind::XMEAS || o.kind == OutputKind::ZMEAS) {
            xb = out.output_meas[k];
            zb = 0;
        } else {
            xb = static_cast<uint8_t>(out.output_frames[k].xs[0]);
            zb = static_cast<uint8_t>(out.output_frames[k].zs[0]);
        }
        if (output_wrong(o.kind, xb, zb)) {
            return Verdict::MALIGNANT;
        }
    }
    return Verdict::BENIGN;
}

Verdict is_malignant(const Program &p, const FaultAssignment &fa) {
    return judge(p, simulate(p, fa));
}

}  // namespace latticeft
