#!/usr/bin/env python3
# Copyright 2026 The latticeft Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the shipped netlists into fixtures/.

The G||V schedules in gv_schedule.json were found offline with a small 0/1
program over the 3x7 ancilla interior ("ext": ancilla ends next to the data
home base) and over rows 1-5 ("home": ancilla ends on the home base, used by
the preparation rectangles).
"""

import json
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
LICENSE = [l.replace("//", "#", 1) for l in open(os.path.join(HERE, "..", "src", "threshold.cc")).read().splitlines()[:13]]
SCHED = json.load(open(os.path.join(HERE, "gv_schedule.json")))

# code index -> home base site inside a cell
HOME = {6: (1, 1), 5: (1, 3), 3: (1, 5), 4: (5, 1), 2: (5, 3), 1: (5, 5), 7: (5, 7)}
# code index -> extraction site (ancilla neighbour of HOME)
EXTR = {j: (2 if r == 1 else 4, c) for j, (r, c) in HOME.items()}
PIVOTS = {"a1", "a2", "a4", "v1"}
QUBITS = ["a%d" % j for j in range(1, 8)] + ["v1", "v2", "v3"]

T_PLUS, T_ZERO, T_XM, T_ZM, T_WAIT, T_WAITM, T_H = 11, 12, 13, 14, 15, 16, 8


def fmt(a):
    return "q(%d,%d)" % a


class Net:
    def __init__(self, mode, title):
        self.mode = mode
        self.title = title
        self.locs = []
        self.roles = {}
        self.directives = []
        self.exrec = None

    def loc(self, t, typ, qs, region, conds=()):
        self.locs.append((t, typ, tuple(qs), region, tuple(conds)))

    def role(self, a, r):
        self.roles.setdefault(a, r)

    def text(self):
        out = LICENSE + ["# %s" % self.title, "mode %s" % self.mode]
        if self.exrec is not None:
            out.append("exrec %d" % self.exrec)
        for a in sorted(self.roles):
            out.append("role %s %s" % (fmt(a), self.roles[a]))
        out.extend(self.directives)
        for (t, typ, qs, region, conds) in (sorted(self.locs, key=lambda l: l[0])):
            s = "step %d: %d %s region=%s" % (t, typ, " ".join(fmt(q) for q in qs), region)
            for name, val in conds:
                s += " branch=%s:%s" % (name, val)
            out.append(s)
        return "\n".join(out) + "\n"


def cond_str(conds):
    return "".join(" branch=%s:%s" % c for c in conds)


def two_qubit_type(mode, kind, a, b, fused):
    if mode == "nonlocal":
        return {"CNOT": 0, "CZ": 2}[kind]
    horiz = a[0] == b[0]
    base = {"CNOT": 0, "CZ": 2}[kind]
    if fused:
        base += 4
    return base + (0 if horiz else 1)


class Geometry:
    """Maps cell-local coordinates or block/index labels to addresses."""

    def __init__(self, mode, origin=(0, 0), blocks=None):
        self.mode = mode
        self.origin = origin
        self.blocks = blocks

    def site(self, rc):
        return (self.origin[0] + rc[0], self.origin[1] + rc[1])


def gv(net, mode, variant, t0, region, conds, origin=(0, 0), block=None, with_v=True, bp=None):
    """Appends one G||V attempt. Returns (final ancilla addresses by code index, v addresses)."""
    sch = SCHED[variant]
    if mode == "local":
        pos = {q: tuple(sch["init"][q]) for q in QUBITS}

        def addr(q):
            return (origin[0] + pos[q][0], origin[1] + pos[q][1])
    else:
        label = {q: (block, (int(q[1]) - 1) if q[0] == "a" else 6 + int(q[1])) for q in QUBITS}

        def addr(q):
            return label[q]
    live = [q for q in QUBITS if with_v or q[0] == "a"]
    for q in live:
        net.loc(t0, T_PLUS if q in PIVOTS else T_ZERO, [addr(q)], region, conds)
        net.role(addr(q), "verification" if q[0] == "v" else "ancilla")
    for s in range(2, 8):
        t = t0 + s - 1
        busy = set()
        moves = {m[0]: (tuple(m[1]), tuple(m[2])) for m in sch["moves"].get(str(s), [])}
        for a, b in sch["gates"][str(s)]:
            kind = "CNOT" if (a[0] == b[0]) else "CZ"
            if not with_v and (a[0] == "v" or b[0] == "v"):
                continue
            fused = mode == "local" and a in moves and b in moves and moves[a][1] == pos[b]
            typ = two_qubit_type(mode, kind, addr(a), addr(b), fused)
            net.loc(t, typ, [addr(a), addr(b)], region, conds)
            busy.update([a, b])
            if fused:
                pos[a], pos[b] = pos[b], pos[a]
        if mode == "local":
            for q, (src, dst) in sorted(moves.items()):
                if q in busy:
                    continue
                if q not in live:
                    continue
                assert pos[q] == src, (variant, s, q, pos[q], src)
                frm = addr(q)
                pos[q] = dst
                to = addr(q)
                net.loc(t, 9 if frm[0] == to[0] else 10, [frm, to], region, conds)
                busy.add(q)
            if not with_v:
                # a CZoSWAP whose verification partner was dropped becomes a plain SWAP
                for q, (src, dst) in sorted(moves.items()):
                    if q[0] == "a" and q not in busy and pos[q] == src:
                        frm = addr(q)
                        pos[q] = dst
                        net.loc(t, 9 if frm[0] == addr(q)[0] else 10, [frm, addr(q)], region, conds)
                        busy.add(q)
        if s == 7 and with_v:
            for v in ["v1", "v2", "v3"]:
                net.loc(t, T_XM, [addr(v)], region, conds)
                busy.add(v)
        for q in live:
            if q not in busy:
                net.loc(t, T_WAIT, [addr(q)], region, conds)
    anc = {j: addr("a%d" % j) for j in range(1, 8)}
    vs = [addr(v) for v in ["v1", "v2", "v3"]]
    if bp is not None and with_v:
        net.directives.append("branchpoint %s parity-of %s at %d" % (bp, " ".join(fmt(v) for v in vs), t0 + 6))
    if mode == "local":
        target = EXTR if variant == "ext" else HOME
        for j in range(1, 8):
            assert anc[j] == (origin[0] + target[j][0], origin[1] + target[j][1]), (variant, j, anc[j])
    return anc, vs


def extraction(net, mode, t, kind, anc, data, region, conds):
    for j in range(1, 8):
        if kind == "Z":
            # ancilla controls, data target: data Z errors copy onto the ancilla
            a, b = anc[j], data[j]
            typ = 1 if mode == "local" else 0
        else:
            a, b = data[j], anc[j]
            typ = 3 if mode == "local" else 2
        net.loc(t, typ, [a, b], region, conds)


def measure_block(net, t, addrs, typ, region, conds):
    for j in range(1, 8):
        net.loc(t, typ, [addrs[j]], region, conds)


def syndrome(net, name, kind, t, anc, data, conds):
    net.directives.append(
        "syndrome %s correct=%s at %d anc %s data %s%s"
        % (name, kind, t, " ".join(fmt(anc[j]) for j in range(1, 8)), " ".join(fmt(data[j]) for j in range(1, 8)), cond_str(conds))
    )


def ec(net, mode, t0, region, name, data, origin=(0, 0), blocks=None):
    """One deterministic 1-EC. data: code index -> address. Returns last step."""
    A1, A2, A3 = name + ".a1", name + ".a2", name + ".a3"
    p1, f1 = (A1, "pass"), (A1, "fail")
    p2, f2 = (A2, "pass"), (A2, "fail")
    net.directives.append("ec %s %s %s %s" % (name, A1, A2, A3))

    def data_wait(t, conds, typ=T_WAIT):
        for j in range(1, 8):
            net.loc(t, typ, [data[j]], region, conds)

    if mode == "local":
        s1, m1, g2, s2, m2, g3, s3, m3 = 7, 8, 9, 16, 17, 18, 25, 26
        o = dict(origin=origin)
        anc1, _ = gv(net, mode, "ext", t0, region, (), bp=A1, **o)
        anc2, _ = gv(net, mode, "ext", t0 + g2, region, (), bp=A2, **o)
        anc3, _ = gv(net, mode, "ext", t0 + g3, region, (f1,), bp=A3, **o)
        gv(net, mode, "ext", t0 + g3, region, (p1, f2), **o)
    else:
        s1, m1, g2, s2, m2, g3, s3, m3 = 7, 8, 5, 12, 13, 12, 19, 20
        anc1, _ = gv(net, mode, "ext", t0, region, (), block=blocks[0], bp=A1)
        anc2, _ = gv(net, mode, "ext", t0 + g2, region, (), block=blocks[1], bp=A2)
        anc3, _ = gv(net, mode, "ext", t0 + g3, region, (f1,), block=blocks[2], bp=A3)
        gv(net, mode, "ext", t0 + g3, region, (p1, f2), block=blocks[2])
    # first extraction
    extraction(net, mode, t0 + s1, "Z", anc1, data, region, (p1,))
    data_wait(t0 + s1, (f1,))
    measure_block(net, t0 + m1, anc1, T_XM, region, (p1,))
    syndrome(net, name + ".s1", "Z", t0 + m1, anc1, data, (p1,))
    # second ancilla
    extraction(net, mode, t0 + s2, "X", anc2, data, region, (p1, p2))
    extraction(net, mode, t0 + s2, "Z", anc2, data, region, (f1,))
    data_wait(t0 + s2, (p1, f2))
    measure_block(net, t0 + m2, anc2, T_XM, region, (p1, p2))
    measure_block(net, t0 + m2, anc2, T_XM, region, (f1,))
    syndrome(net, name + ".s2x", "X", t0 + m2, anc2, data, (p1, p2))
    syndrome(net, name + ".s2z", "Z", t0 + m2, anc2, data, (f1,))
    # third ancilla
    for c in [(f1,), (p1, f2)]:
        extraction(net, mode, t0 + s3, "X", anc3, data, region, c)
        measure_block(net, t0 + m3, anc3, T_XM, region, c)
        syndrome(net, name + ".s3" + ("a" if len(c) == 1 else "b"), "X", t0 + m3, anc3, data, c)
    data_wait(t0 + s3, (p1, p2))
    for t in range(t0 + s1 + 1, t0 + s3):
        if t in (t0 + s2,):
            continue
        data_wait(t, (), T_WAITM if t in (t0 + m1, t0 + m2) else T_WAIT)
    return t0 + m3


def home(origin, j):
    return (origin[0] + HOME[j][0], origin[1] + HOME[j][1])


class Mover:
    """Tracks data positions through a Ga and emits waits for idle data."""

    def __init__(self, net, region):
        self.net = net
        self.region = region
        self.pos = {}
        self.start = {}
        self.moves = []
        self.busy = {}

    def add(self, key, a):
        self.pos[key] = a
        self.start[key] = a

    def pos_before(self, t):
        pos = dict(self.start)
        for tm, key, dst in self.moves:
            if tm < t:
                pos[key] = dst
        return pos

    def swap_to(self, t, key, dst):
        src = self.pos[key]
        self.net.loc(t, 9 if src[0] == dst[0] else 10, [src, dst], self.region)
        self.pos[key] = dst
        self.moves.append((t, key, dst))
        self.busy.setdefault(t, set()).add(key)

    def shift(self, t, key, dr, dc):
        src = self.pos[key]
        self.swap_to(t, key, (src[0] + dr, src[1] + dc))

    def gate(self, t, typ, k1, k2, swap_after=False):
        self.net.loc(t, typ, [self.pos[k1], self.pos[k2]], self.region)
        self.busy.setdefault(t, set()).update([k1, k2])
        if swap_after:
            self.pos[k1], self.pos[k2] = self.pos[k2], self.pos[k1]
            self.moves.append((t, k1, self.pos[k1]))
            self.moves.append((t, k2, self.pos[k2]))

    def single(self, t, typ, key):
        self.net.loc(t, typ, [self.pos[key]], self.region)
        self.busy.setdefault(t, set()).add(key)

    def fill_waits(self, t_from, t_to, typ_at=None):
        for t in range(t_from, t_to + 1):
            pos = self.pos_before(t)
            for key in sorted(pos):
                if key not in self.busy.get(t, set()):
                    typ = (typ_at or {}).get(t, T_WAIT)
                    self.net.loc(t, typ, [pos[key]], self.region)


CELL_A = (0, 0)
CELL_H = (0, 8)
CELL_V = (6, 0)


def local_exrec(l):
    net = Net("local", "local 1-exRec for location type %d" % l)
    net.exrec = l
    two = l <= 7
    origin_b = CELL_H if l in (0, 2, 4, 6, 9) else CELL_V
    dA = {j: home(CELL_A, j) for j in range(1, 8)}
    dB = {j: home(origin_b, j) for j in range(1, 8)}
    if l in (11, 12):
        return local_prep(l)
    for j in range(1, 8):
        net.role(dA[j], "data")
        if two:
            net.role(dB[j], "data")
    ec(net, "local", 1, "leading-EC-A", "LA", dA, origin=CELL_A)
    if two:
        ec(net, "local", 1, "leading-EC-B", "LB", dB, origin=origin_b)
    R = 26  # global step = R + Rec step
    if l in (13, 14):
        measure_block(net, 27, dA, T_XM if l == 13 else T_ZM, "Ga", ())
        net.directives.append("output %s at 27 %s" % ("xmeas" if l == 13 else "zmeas", " ".join(fmt(dA[j]) for j in range(1, 8))))
        return net
    mv = Mover(net, "Ga")
    for j in range(1, 8):
        mv.add(("A", j), dA[j])
        if two:
            mv.add(("B", j), dB[j])
    trail = 9
    if l in (0, 2, 4, 6):
        kind = {0: 1, 2: 3, 4: 5, 6: 7}[l]
        for j in range(1, 8):
            a, b = ("A", j), ("B", j)
            up = -1 if HOME[j][0] == 1 else 1
            mv.shift(R + 1, a, up, 0)
            mv.shift(R + 1, b, 0, -1)
            for k in range(2, 6):
                mv.shift(R + k, a, 0, 1)
            for k in range(2, 5):
                mv.shift(R + k, b, 0, -1)
            mv.gate(R + 6, kind, a, b, swap_after=l in (4, 6))
            # the qubit on A's path returns to A's home; same for B
            qa, qb = (b, a) if l in (4, 6) else (a, b)
            for k in range(7, 11):
                mv.shift(R + k, qa, 0, -1)
                mv.shift(R + k, qb, 0, 1)
            mv.shift(R + 11, qa, -up, 0)
    elif l in (1, 3, 5, 7):
        kind = {1: 0, 3: 2, 5: 4, 7: 6}[l]
        for j in range(1, 8):
            a, b = ("A", j), ("B", j)
            mv.shift(R + 1, a, 0, 1)
            for k in range(2, 5):
                mv.shift(R + k, a, 1, 0)
                mv.shift(R + k, b, -1, 0)
            mv.gate(R + 5, kind, a, b, swap_after=l in (5, 7))
            qa, qb = (b, a) if l in (5, 7) else (a, b)
            for k in range(6, 9):
                mv.shift(R + k, qa, -1, 0)
                mv.shift(R + k, qb, 1, 0)
            mv.shift(R + 9, qa, 0, -1)
    elif l == 8:
        for j in range(1, 8):
            mv.single(R + 1, T_H, ("A", j))
    elif l == 9:
        for j in range(1, 8):
            for k in range(1, 9):
                mv.shift(R + k, ("A", j), 0, 1)
    elif l == 10:
        # rows move in lockstep, bottom first so the top row never meets it
        for k in range(2, 8):
            for j in sorted(range(1, 8), key=lambda j: -HOME[j][0]):
                mv.shift(R + k, ("A", j), 1, 0)
    elif l == 15:
        for j in range(1, 8):
            mv.single(R + 1, T_WAIT, ("A", j))
    elif l == 16:
        for j in range(1, 8):
            mv.single(R + 1, T_WAITM, ("A", j))
        trail = 2
    first_extract = R + trail + 7
    mv.fill_waits(R + 1, first_extract - 1)
    outs = []
    if two:
        outA = {j: home(CELL_A, j) for j in range(1, 8)}
        outB = {j: home(origin_b, j) for j in range(1, 8)}
        ec(net, "local", R + trail, "trailing-EC-A", "TA", outA, origin=CELL_A)
        ec(net, "local", R + trail, "trailing-EC-B", "TB", outB, origin=origin_b)
        outs = [outA, outB]
    else:
        o = origin_b if l in (9, 10) else CELL_A
        out = {j: home(o, j) for j in range(1, 8)}
        ec(net, "local", R + trail, "trailing-EC-A", "TA", out, origin=o)
        outs = [out]
    for out in outs:
        for j in range(1, 8):
            assert out[j] in mv.pos.values(), (l, j, out[j])
        net.directives.append("output any %s" % " ".join(fmt(out[j]) for j in range(1, 8)))
    return net


def local_prep(l):
    net = Net("local", "local 1-exRec for location type %d" % l)
    net.exrec = l
    P1 = "P.p1"
    anc, _ = gv(net, "local", "home", 1, "prep-attempt-1", (), origin=CELL_A, bp=P1)
    gv(net, "local", "home", 8, "prep-attempt-2", ((P1, "fail"),), origin=CELL_A)
    for t in range(8, 15):
        for j in range(1, 8):
            net.loc(t, T_WAIT, [anc[j]], "prep-attempt-1", ((P1, "pass"),))
    for t in range(15, 22):
        for j in range(1, 8):
            typ = T_H if (l == 11 and t == 15) else T_WAIT
            net.loc(t, typ, [anc[j]], "Ga")
    ec(net, "local", 15, "trailing-EC-A", "TA", anc, origin=CELL_A)
    net.directives.append("output %s %s" % ("plus" if l == 11 else "zero", " ".join(fmt(anc[j]) for j in range(1, 8))))
    return net


def nonlocal_exrec(l):
    net = Net("nonlocal", "nonlocal 1-exRec for location type %d" % l)
    net.exrec = l
    two = l <= 7
    dA = {j: (0, j - 1) for j in range(1, 8)}
    dB = {j: (1, j - 1) for j in range(1, 8)}
    if l in (11, 12):
        P1 = "P.p1"
        anc, _ = gv(net, "nonlocal", "ext", 1, "prep-attempt-1", (), block=0, bp=P1)
        gv(net, "nonlocal", "ext", 8, "prep-attempt-2", ((P1, "fail"),), block=0)
        for t in range(8, 15):
            for j in range(1, 8):
                net.loc(t, T_WAIT, [anc[j]], "prep-attempt-1", ((P1, "pass"),))
        for t in range(15, 22):
            for j in range(1, 8):
                net.loc(t, T_H if (l == 11 and t == 15) else T_WAIT, [anc[j]], "Ga")
        ec(net, "nonlocal", 15, "trailing-EC-A", "TA", anc, blocks=(2, 3, 4))
        net.directives.append("output %s %s" % ("plus" if l == 11 else "zero", " ".join(fmt(anc[j]) for j in range(1, 8))))
        return net
    for j in range(1, 8):
        net.role(dA[j], "data")
        if two:
            net.role(dB[j], "data")
    ec(net, "nonlocal", 1, "leading-EC-A", "LA", dA, blocks=(2, 3, 4))
    if two:
        ec(net, "nonlocal", 1, "leading-EC-B", "LB", dB, blocks=(5, 6, 7))
    R = 20
    if l in (13, 14):
        measure_block(net, 21, dA, T_XM if l == 13 else T_ZM, "Ga", ())
        net.directives.append("output %s at 21 %s" % ("xmeas" if l == 13 else "zmeas", " ".join(fmt(dA[j]) for j in range(1, 8))))
        return net
    mv = Mover(net, "Ga")
    for j in range(1, 8):
        mv.add(("A", j), dA[j])
        if two:
            mv.add(("B", j), dB[j])
    if two:
        for j in range(1, 8):
            mv.gate(R + 1, l, ("A", j), ("B", j), swap_after=l in (4, 5, 6, 7))
    elif l in (9, 10):
        for j in range(1, 8):
            mv.swap_to(R + 1, ("A", j), dB[j])
        # nonlocal swaps keep their exRec type
        net.locs = [(t, (l if typ in (9, 10) and t == R + 1 else typ), qs, rg, c) for (t, typ, qs, rg, c) in net.locs]
    elif l == 8:
        for j in range(1, 8):
            mv.single(R + 1, T_H, ("A", j))
    else:
        for j in range(1, 8):
            mv.single(R + 1, l, ("A", j))
    trail = 2
    mv.fill_waits(R + 1, R + trail + 6)
    if two:
        outA = {j: mv.pos[("A", j)] for j in range(1, 8)}
        outB = {j: mv.pos[("B", j)] for j in range(1, 8)}
        ec(net, "nonlocal", R + trail, "trailing-EC-A", "TA", outA, blocks=(8, 9, 10))
        ec(net, "nonlocal", R + trail, "trailing-EC-B", "TB", outB, blocks=(11, 12, 13))
        outs = [outA, outB]
    else:
        out = {j: mv.pos[("A", j)] for j in range(1, 8)}
        ec(net, "nonlocal", R + trail, "trailing-EC-A", "TA", out, blocks=(8, 9, 10))
        outs = [out]
    for out in outs:
        net.directives.append("output any %s" % " ".join(fmt(out[j]) for j in range(1, 8)))
    return net


def components(mode):
    nets = {}
    o = dict(origin=CELL_A) if mode == "local" else dict(block=2)
    data = {j: (home(CELL_A, j) if mode == "local" else (0, j - 1)) for j in range(1, 8)}

    g = Net(mode, "%s encoder G" % mode)
    anc, _ = gv(g, mode, "ext", 1, "leading-EC-A", (), with_v=False, **o)
    g.directives.append("output zero %s" % " ".join(fmt(anc[j]) for j in range(1, 8)))
    nets["g"] = g

    gvn = Net(mode, "%s prepare and verify G||V" % mode)
    anc, vs = gv(gvn, mode, "ext", 1, "leading-EC-A", (), bp="V.a", **o)
    gvn.directives.append("output zero %s" % " ".join(fmt(anc[j]) for j in range(1, 8)))
    nets["gv"] = gvn

    # verification only: the ancilla block is an input
    nets["v"] = verification_only(mode, o)

    for kind in ("X", "Z"):
        n = Net(mode, "%s syndrome extraction S_%s" % (mode, kind))
        ext = {j: ((EXTR[j][0], EXTR[j][1]) if mode == "local" else (2, j - 1)) for j in range(1, 8)}
        for j in range(1, 8):
            n.role(data[j], "data")
            n.role(ext[j], "ancilla")
        extraction(n, mode, 1, kind, ext, data, "leading-EC-A", ())
        measure_block(n, 2, ext, T_XM, "leading-EC-A", ())
        syndrome(n, "S." + kind, kind, 2, ext, data, ())
        n.directives.append("output any %s" % " ".join(fmt(data[j]) for j in range(1, 8)))
        nets["s" + kind.lower()] = n

    e = Net(mode, "%s deterministic 1-EC" % mode)
    for j in range(1, 8):
        e.role(data[j], "data")
    if mode == "local":
        ec(e, mode, 1, "leading-EC-A", "E", data, origin=CELL_A)
    else:
        ec(e, mode, 1, "leading-EC-A", "E", data, blocks=(2, 3, 4))
    e.directives.append("output any %s" % " ".join(fmt(data[j]) for j in range(1, 8)))
    nets["ec"] = e
    return nets


def verification_only(mode, o):
    """V part of G||V: cat state, CZs onto ancilla qubits 2,4,6, X measurements."""
    vnet = Net(mode, "%s verification V" % mode)
    sch = SCHED["ext"]
    pos = {q: tuple(sch["init"][q]) for q in QUBITS} if mode == "local" else None

    def addr(q):
        if mode == "local":
            return (o["origin"][0] + pos[q][0], o["origin"][1] + pos[q][1])
        return (o["block"], (int(q[1]) - 1) if q[0] == "a" else 6 + int(q[1]))

    touched_a = {}
    for q in ("v1", "v2", "v3"):
        vnet.loc(1, T_PLUS if q in PIVOTS else T_ZERO, [addr(q)], "leading-EC-A")
        vnet.role(addr(q), "verification")
    for s in range(2, 8):
        moves = {m[0]: (tuple(m[1]), tuple(m[2])) for m in sch["moves"].get(str(s), [])}
        busy = set()
        for a, b in sch["gates"][str(s)]:
            fused = mode == "local" and a in moves and b in moves and moves[a][1] == pos[b]
            if a[0] == "v":
                kind = "CNOT" if b[0] == "v" else "CZ"
                if b[0] == "a" and b not in touched_a:
                    touched_a[b] = addr(b)
                    vnet.role(addr(b), "ancilla")
                vnet.loc(s, two_qubit_type(mode, kind, addr(a), addr(b), fused), [addr(a), addr(b)], "leading-EC-A")
                busy.update([a, b])
            if fused:
                pos[a], pos[b] = pos[b], pos[a]
        if mode == "local":
            for q, (src, dst) in sorted(moves.items()):
                if q in busy or q[0] != "v":
                    if q[0] == "a" and q not in busy:
                        pos[q] = dst
                    continue
                frm = addr(q)
                pos[q] = dst
                vnet.loc(s, 9 if frm[0] == addr(q)[0] else 10, [frm, addr(q)], "leading-EC-A")
                busy.add(q)
        for q in ("v1", "v2", "v3"):
            if s == 7:
                vnet.loc(s, T_XM, [addr(q)], "leading-EC-A")
            elif q not in busy:
                vnet.loc(s, T_WAIT, [addr(q)], "leading-EC-A")
    vs = [addr(q) for q in ("v1", "v2", "v3")]
    vnet.directives.append("branchpoint V.a parity-of %s at 7" % " ".join(fmt(x) for x in vs))
    return vnet


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(HERE, "..", "fixtures")
    os.makedirs(outdir, exist_ok=True)
    for mode in ("local", "nonlocal"):
        for name, n in components(mode).items():
            open(os.path.join(outdir, "%s_%s.net" % (name, mode)), "w").write(n.text())
        for l in range(17):
            n = local_exrec(l) if mode == "local" else nonlocal_exrec(l)
            open(os.path.join(outdir, "exrec_%d_%s.net" % (l, mode)), "w").write(n.text())


if __name__ == "__main__":
    main()
