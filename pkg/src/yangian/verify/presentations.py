"""Suites for the defining relations: RTT, Levi, Drinfeld, parabolic, root vectors."""

from __future__ import annotations

import random
from typing import Iterator

import gmpy2

from ..algebra import Yangian, commutator
from ..generators import drinfeld_generators, parabolic_generators, root_vector
from ..morphisms import MorphismDescriptor, apply_linear_auto, psi_embed
from ..series import (
    Series,
    SeriesMatrix,
    matrix_invert,
    qybe_residual,
    quasi_det,
)
from .coeff import S, first_failure, times_diff
from .common import fmt, level_tuples, nus, series_diff, tag, total
from .core import Case, SuiteSpec, suite

QYBE_PAIRS = 5


# -- RTT ---------------------------------------------------------------------------

def mr_rhs(alg, i, j, h, k, r, s):
    T = alg.T
    return total(alg, (T(i, k, r + s - 1 - t) * T(h, j, t) - T(i, k, t) * T(h, j, r + s - 1 - t)
                       for t in range(min(r, s))))


def seeded_pairs(seed: int, count: int = QYBE_PAIRS):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        u = gmpy2.mpq(rng.randint(-30, 30), rng.randint(1, 12))
        v = gmpy2.mpq(rng.randint(-30, 30), rng.randint(1, 12))
        out.append((u, v))
    return out


@suite("rtt", "RTT relation (mr), gl_n degeneration, QYBE and coefficients of the RTT equation",
       max_n=4)
def rtt_cases(spec: SuiteSpec) -> Iterator[Case]:
    n = spec.n
    alg = Yangian(n)
    T = alg.T
    idx = range(1, n + 1)
    quads = [(i, j, h, k) for i in idx for j in idx for h in idx for k in idx]
    for i, j, h, k in quads:
        yield Case(f"gln:{fmt(i=i, j=j, h=h, k=k)}", "(mr) r=s=1",
                   lambda i=i, j=j, h=h, k=k: commutator(T(i, j, 1), T(h, k, 1))
                   - (T(i, k, 1) * (1 if h == j else 0) - T(h, j, 1) * (1 if i == k else 0)))
    bound = spec.level_bound()
    for r, s in level_tuples(2, bound):
        for i, j, h, k in quads:
            yield Case(f"mr:{fmt(i=i, j=j, h=h, k=k, r=r, s=s)}", "(mr)",
                       lambda i=i, j=j, h=h, k=k, r=r, s=s:
                       commutator(T(i, j, r), T(h, k, s)) - mr_rhs(alg, i, j, h, k, r, s))
    for num, (u, v) in enumerate(seeded_pairs(spec.seed)):
        yield Case(f"qybe:{fmt(pair=num, u=u, v=v)}", "QYBE",
                   lambda u=u, v=v: [x for row in qybe_residual(n, u, v) for x in row])
    cut = spec.cutoff

    def rmdef(i, j, h, k):
        t = lambda a, b, var: S(Series.t_entry(alg, a, b, cut), var)
        lhs = times_diff(t(i, j, "u") * t(h, k, "v")) - t(h, j, "u") * t(i, k, "v")
        rhs = times_diff(t(h, k, "v") * t(i, j, "u")) - t(h, j, "v") * t(i, k, "u")
        return first_failure(lhs, rhs, ("u", "v"), spec.level_bound(1))

    for i, j, h, k in quads:
        yield Case(f"rmdef:{fmt(i=i, j=j, h=h, k=k)}", "(rmdef)",
                   lambda i=i, j=j, h=h, k=k: rmdef(i, j, h, k))


# -- Levi ----------------------------------------------------------------------------

def block_quasidets(n, nu, cutoff):
    """Block D, E, F series matrices by the explicit quasi-determinant formulas."""
    alg = Yangian(n)
    t = SeriesMatrix.t_matrix(alg, cutoff)
    off = [sum(nu[:a]) for a in range(len(nu) + 1)]

    def blk(rows, cols):
        return SeriesMatrix(alg, [[t.rows[i][j] for j in cols] for i in rows])

    def qd(a, row_block, col_block):
        prev = list(range(off[a - 1]))
        rows = range(off[row_block - 1], off[row_block])
        cols = range(off[col_block - 1], off[col_block])
        if not prev:
            return blk(rows, cols)
        return quasi_det(blk(prev, prev), blk(prev, cols), blk(rows, prev), blk(rows, cols))

    m = len(nu)
    D = {a: qd(a, a, a) for a in range(1, m + 1)}
    Dinv = {a: matrix_invert(D[a]) for a in D}
    E = {(a, b): Dinv[a] * qd(a, a, b) for a in range(1, m + 1) for b in range(a + 1, m + 1)}
    F = {(a, b): qd(a, b, a) * Dinv[a] for a in range(1, m + 1) for b in range(a + 1, m + 1)}
    return D, E, F


@suite("levi", "Levi relations (levirel), D_a as psi images and as quasi-determinants", max_n=4)
def levi_cases(spec: SuiteSpec) -> Iterator[Case]:
    n, cut = spec.n, spec.cutoff
    bound = spec.level_bound()
    for nu in nus(spec):
        g = lambda nu=nu: parabolic_generators(n, nu, cut)
        m = len(nu)
        D = lambda a, i, j, r, g=g: g().D(a, i, j)[r]
        for a in range(1, m + 1):
            for b in range(a, m + 1):
                for i in range(1, nu[a - 1] + 1):
                    for j in range(1, nu[a - 1] + 1):
                        for h in range(1, nu[b - 1] + 1):
                            for k in range(1, nu[b - 1] + 1):
                                for r, s in level_tuples(2, bound):
                                    def check(a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s, D=D):
                                        lhs = commutator(D(a, i, j, r), D(b, h, k, s))
                                        if a != b:
                                            return lhs
                                        alg = lhs.alg
                                        return lhs - total(alg, (
                                            D(a, i, k, r + s - 1 - t) * D(a, h, j, t)
                                            - D(a, i, k, t) * D(a, h, j, r + s - 1 - t)
                                            for t in range(min(r, s))))
                                    yield Case(f"levirel:{fmt(nu=tag(nu), a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s)}",
                                               "(levirel)", check)
        for a in range(1, m + 1):
            shift = sum(nu[:a - 1])
            for i in range(1, nu[a - 1] + 1):
                for j in range(1, nu[a - 1] + 1):
                    def via_psi(a=a, i=i, j=j, shift=shift, g=g):
                        small = Yangian(n - shift)
                        for r in range(1, cut + 1):
                            img = psi_embed(shift, small.T(i, j, r), cut, method="omega")
                            yield f"u^-{r}", img - g().D(a, i, j)[r]
                    yield Case(f"reduce2:{fmt(nu=tag(nu), a=a, i=i, j=j)}", "reduce2(i)", via_psi)
            yield Case(f"qd1:{fmt(nu=tag(nu), a=a)}", "quasi-determinant D_a",
                       lambda a=a, nu=nu, g=g: block_quasidets(n, nu, cut)[0][a] - g().gauss.D[a])


# -- Drinfeld ------------------------------------------------------------------------

@suite("drinfeld", "Drinfeld presentation (r0)-(r13), (r6b), (r7b)")
def drinfeld_cases(spec: SuiteSpec) -> Iterator[Case]:
    n, cut = spec.n, spec.cutoff
    bound = spec.level_bound()
    g = lambda: drinfeld_generators(n, cut)
    D = lambda i, r: g().D(i)[r]
    Dt = lambda i, r: g().Dt(i)[r]
    E = lambda i, r: g().E(i)[r]
    F = lambda i, r: g().F(i)[r]
    one = Yangian(n).one
    zero = Yangian(n).zero
    sm = lambda parts: total(Yangian(n), parts)
    delta = lambda a, b: 1 if a == b else 0
    nodes = range(1, n)
    for i in range(1, n + 1):
        yield Case(f"r0:{fmt(i=i)}", "(r0)", lambda i=i: D(i, 0) - one())
    for i in range(1, n + 1):
        for r in range(bound + 1):
            yield Case(f"r1:{fmt(i=i, r=r)}", "(r1)",
                       lambda i=i, r=r: sm(D(i, t) * Dt(i, r - t) for t in range(r + 1))
                       + (one() if r == 0 else zero()))
    pairs = list(level_tuples(2, bound))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for r, s in pairs:
                yield Case(f"r2:{fmt(i=i, j=j, r=r, s=s)}", "(r2)",
                           lambda i=i, j=j, r=r, s=s: commutator(D(i, r), D(j, s)))
    for i in nodes:
        for j in nodes:
            for r, s in pairs:
                yield Case(f"r3:{fmt(i=i, j=j, r=r, s=s)}", "(r3)",
                           lambda i=i, j=j, r=r, s=s: commutator(E(i, r), F(j, s))
                           - (sm(Dt(i, t) * D(i + 1, r + s - 1 - t) for t in range(r + s))
                              if i == j else zero()))
    for i in range(1, n + 1):
        for j in nodes:
            for r, s in pairs:
                c = delta(i, j) - delta(i, j + 1)
                yield Case(f"r4:{fmt(i=i, j=j, r=r, s=s)}", "(r4)",
                           lambda i=i, j=j, r=r, s=s, c=c: commutator(D(i, r), E(j, s))
                           - sm(D(i, t) * E(j, r + s - 1 - t) for t in range(r)).scale(c))
                yield Case(f"r5:{fmt(i=i, j=j, r=r, s=s)}", "(r5)",
                           lambda i=i, j=j, r=r, s=s, c=c: commutator(D(i, r), F(j, s))
                           + sm(F(j, r + s - 1 - t) * D(i, t) for t in range(r)).scale(c))
    for i in nodes:
        for r, s in pairs:
            yield Case(f"r6:{fmt(i=i, r=r, s=s)}", "(r6)",
                       lambda i=i, r=r, s=s: commutator(E(i, r), E(i, s))
                       - sm(E(i, t) * E(i, r + s - 1 - t) for t in range(1, s))
                       + sm(E(i, t) * E(i, r + s - 1 - t) for t in range(1, r)))
            yield Case(f"r7:{fmt(i=i, r=r, s=s)}", "(r7)",
                       lambda i=i, r=r, s=s: commutator(F(i, r), F(i, s))
                       - sm(F(i, r + s - 1 - t) * F(i, t) for t in range(1, r))
                       + sm(F(i, r + s - 1 - t) * F(i, t) for t in range(1, s)))
            yield Case(f"r6b:{fmt(i=i, r=r, s=s)}", "(r6b)",
                       lambda i=i, r=r, s=s: commutator(E(i, r), E(i, s + 1))
                       - commutator(E(i, r + 1), E(i, s))
                       - E(i, r) * E(i, s) - E(i, s) * E(i, r))
            yield Case(f"r7b:{fmt(i=i, r=r, s=s)}", "(r7b)",
                       lambda i=i, r=r, s=s: commutator(F(i, r + 1), F(i, s))
                       - commutator(F(i, r), F(i, s + 1))
                       - F(i, r) * F(i, s) - F(i, s) * F(i, r))
    for i in range(1, n - 1):
        for r, s in pairs:
            yield Case(f"r8:{fmt(i=i, r=r, s=s)}", "(r8)",
                       lambda i=i, r=r, s=s: commutator(E(i, r), E(i + 1, s + 1))
                       - commutator(E(i, r + 1), E(i + 1, s)) + E(i, r) * E(i + 1, s))
            yield Case(f"r9:{fmt(i=i, r=r, s=s)}", "(r9)",
                       lambda i=i, r=r, s=s: commutator(F(i, r + 1), F(i + 1, s))
                       - commutator(F(i, r), F(i + 1, s + 1)) + F(i + 1, s) * F(i, r))
    for i in nodes:
        for j in nodes:
            if j <= i + 1:
                continue
            for r, s in pairs:
                yield Case(f"r10:{fmt(i=i, j=j, r=r, s=s)}", "(r10)",
                           lambda i=i, j=j, r=r, s=s: commutator(E(i, r), E(j, s)))
                yield Case(f"r11:{fmt(i=i, j=j, r=r, s=s)}", "(r11)",
                           lambda i=i, j=j, r=r, s=s: commutator(F(i, r), F(j, s)))
    for i in nodes:
        for j in nodes:
            if abs(i - j) != 1:
                continue
            for r, s, t in level_tuples(3, bound):
                if r > s:
                    continue
                yield Case(f"r12:{fmt(i=i, j=j, r=r, s=s, t=t)}", "(r12)",
                           lambda i=i, j=j, r=r, s=s, t=t:
                           commutator(E(i, r), commutator(E(i, s), E(j, t)))
                           + commutator(E(i, s), commutator(E(i, r), E(j, t))))
                yield Case(f"r13:{fmt(i=i, j=j, r=r, s=s, t=t)}", "(r13)",
                           lambda i=i, j=j, r=r, s=s, t=t:
                           commutator(F(i, r), commutator(F(i, s), F(j, t)))
                           + commutator(F(i, s), commutator(F(i, r), F(j, t))))


# -- parabolic -----------------------------------------------------------------------

def _rng(k):
    return range(1, k + 1)


@suite("parabolic", "parabolic presentation (pr1)-(pr14)", max_n=4)
def parabolic_cases(spec: SuiteSpec) -> Iterator[Case]:
    for nu in nus(spec):
        yield from _parabolic_nu(spec, nu)


def _parabolic_nu(spec: SuiteSpec, nu) -> Iterator[Case]:
    n, cut = spec.n, spec.cutoff
    bound = spec.level_bound()
    m = len(nu)
    alg = Yangian(n)
    g = lambda: parabolic_generators(n, nu, cut)
    D = lambda a, i, j, r: g().D(a, i, j)[r]
    Dt = lambda a, i, j, r: g().Dt(a, i, j)[r]
    E = lambda a, i, j, r: g().Ea(a, i, j)[r]
    F = lambda a, i, j, r: g().Fa(a, i, j)[r]
    sm = lambda parts: total(alg, parts)
    w = lambda a: _rng(nu[a - 1])
    pre = lambda name, **kw: f"{name}:{fmt(nu=tag(nu), **kw)}"
    pairs = list(level_tuples(2, bound))

    for a in range(1, m + 1):
        for i in w(a):
            for j in w(a):
                yield Case(pre("pr1", a=a, i=i, j=j), "(pr1)",
                           lambda a=a, i=i, j=j: D(a, i, j, 0) - alg.scalar(1 if i == j else 0))
    for a in range(1, m + 1):
        for i in w(a):
            for j in w(a):
                for r in range(bound + 1):
                    yield Case(pre("pr2", a=a, i=i, j=j, r=r), "(pr2)",
                               lambda a=a, i=i, j=j, r=r:
                               sm(D(a, i, p, t) * Dt(a, p, j, r - t)
                                  for t in range(r + 1) for p in w(a))
                               + alg.scalar(1 if (r == 0 and i == j) else 0))
    for a in range(1, m + 1):
        for b in range(a, m + 1):
            for i in w(a):
                for j in w(a):
                    for h in w(b):
                        for k in w(b):
                            for r, s in pairs:
                                def pr3(a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s):
                                    lhs = commutator(D(a, i, j, r), D(b, h, k, s))
                                    if a != b:
                                        return lhs
                                    return lhs - sm(D(a, i, k, r + s - 1 - t) * D(a, h, j, t)
                                                    - D(a, i, k, t) * D(a, h, j, r + s - 1 - t)
                                                    for t in range(min(r, s)))
                                yield Case(pre("pr3", a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s),
                                           "(pr3)", pr3)
    for a in range(1, m):
        for b in range(1, m):
            for i in w(a):
                for j in w(a + 1):
                    for h in w(b + 1):
                        for k in w(b):
                            for r, s in pairs:
                                yield Case(pre("pr6", a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s), "(pr6)",
                                           lambda a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s:
                                           commutator(E(a, i, j, r), F(b, h, k, s))
                                           - (sm(Dt(a, i, k, t) * D(a + 1, h, j, r + s - 1 - t)
                                                 for t in range(r + s)) if a == b else alg.zero()))
    for a in range(1, m + 1):
        for b in range(1, m):
            for i in w(a):
                for j in w(a):
                    for h in w(b):
                        for k in w(b + 1):
                            for r, s in pairs:
                                def pr4(a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s):
                                    out = commutator(D(a, i, j, r), E(b, h, k, s))
                                    if a == b and h == j:
                                        out = out - sm(D(a, i, p, t) * E(a, p, k, r + s - 1 - t)
                                                       for t in range(r) for p in w(a))
                                    if a == b + 1:
                                        out = out + sm(D(b + 1, i, k, t) * E(b, h, j, r + s - 1 - t)
                                                       for t in range(r))
                                    return out
                                yield Case(pre("pr4", a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s),
                                           "(pr4)", pr4)
            for i in w(a):
                for j in w(a):
                    for h in w(b + 1):
                        for k in w(b):
                            for r, s in pairs:
                                def pr5(a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s):
                                    out = commutator(D(a, i, j, r), F(b, h, k, s))
                                    if a == b + 1:
                                        out = out - sm(F(b, i, k, r + s - 1 - t) * D(b + 1, h, j, t)
                                                       for t in range(r))
                                    if a == b and i == k:
                                        out = out + sm(F(a, h, p, r + s - 1 - t) * D(a, p, j, t)
                                                       for t in range(r) for p in w(a))
                                    return out
                                yield Case(pre("pr5", a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s),
                                           "(pr5)", pr5)
    for a in range(1, m):
        for i in w(a):
            for j in w(a + 1):
                for h in w(a):
                    for k in w(a + 1):
                        for r, s in pairs:
                            yield Case(pre("pr7", a=a, i=i, j=j, h=h, k=k, r=r, s=s), "(pr7)",
                                       lambda a=a, i=i, j=j, h=h, k=k, r=r, s=s:
                                       commutator(E(a, i, j, r), E(a, h, k, s))
                                       - sm(E(a, i, k, t) * E(a, h, j, r + s - 1 - t) for t in range(1, s))
                                       + sm(E(a, i, k, t) * E(a, h, j, r + s - 1 - t) for t in range(1, r)))
        for i in w(a + 1):
            for j in w(a):
                for h in w(a + 1):
                    for k in w(a):
                        for r, s in pairs:
                            yield Case(pre("pr8", a=a, i=i, j=j, h=h, k=k, r=r, s=s), "(pr8)",
                                       lambda a=a, i=i, j=j, h=h, k=k, r=r, s=s:
                                       commutator(F(a, i, j, r), F(a, h, k, s))
                                       - sm(F(a, i, k, r + s - 1 - t) * F(a, h, j, t) for t in range(1, r))
                                       + sm(F(a, i, k, r + s - 1 - t) * F(a, h, j, t) for t in range(1, s)))
    for a in range(1, m - 1):
        for i in w(a):
            for j in w(a + 1):
                for h in w(a + 1):
                    for k in w(a + 2):
                        for r, s in pairs:
                            yield Case(pre("pr9", a=a, i=i, j=j, h=h, k=k, r=r, s=s), "(pr9)",
                                       lambda a=a, i=i, j=j, h=h, k=k, r=r, s=s:
                                       commutator(E(a, i, j, r), E(a + 1, h, k, s + 1))
                                       - commutator(E(a, i, j, r + 1), E(a + 1, h, k, s))
                                       + (sm(E(a, i, q, r) * E(a + 1, q, k, s) for q in w(a + 1))
                                          if h == j else alg.zero()))
        for i in w(a + 1):
            for j in w(a):
                for h in w(a + 2):
                    for k in w(a + 1):
                        for r, s in pairs:
                            yield Case(pre("pr10", a=a, i=i, j=j, h=h, k=k, r=r, s=s), "(pr10)",
                                       lambda a=a, i=i, j=j, h=h, k=k, r=r, s=s:
                                       commutator(F(a, i, j, r + 1), F(a + 1, h, k, s))
                                       - commutator(F(a, i, j, r), F(a + 1, h, k, s + 1))
                                       + (sm(F(a + 1, h, q, s) * F(a, q, j, r) for q in w(a + 1))
                                          if i == k else alg.zero()))
    for a in range(1, m):
        for b in range(a + 1, m):
            for i in w(a):
                for j in w(a + 1):
                    for h in w(b):
                        for k in w(b + 1):
                            if b == a + 1 and h == j:
                                continue
                            for r, s in pairs:
                                yield Case(pre("pr11", a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s), "(pr11)",
                                           lambda a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s:
                                           commutator(E(a, i, j, r), E(b, h, k, s)))
            for i in w(a + 1):
                for j in w(a):
                    for h in w(b + 1):
                        for k in w(b):
                            if b == a + 1 and i == k:
                                continue
                            for r, s in pairs:
                                yield Case(pre("pr12", a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s), "(pr12)",
                                           lambda a=a, b=b, i=i, j=j, h=h, k=k, r=r, s=s:
                                           commutator(F(a, i, j, r), F(b, h, k, s)))
    triples = [x for x in level_tuples(3, bound) if x[0] <= x[1]]
    for a in range(1, m):
        for b in (a - 1, a + 1):
            if not 1 <= b < m:
                continue
            for i in w(a):
                for j in w(a + 1):
                    for h in w(a):
                        for k in w(a + 1):
                            for f in w(b):
                                for gg in w(b + 1):
                                    for r, s, t in triples:
                                        yield Case(pre("pr13", a=a, b=b, i=i, j=j, h=h, k=k, f=f, g=gg,
                                                       r=r, s=s, t=t), "(pr13)",
                                                   lambda a=a, b=b, i=i, j=j, h=h, k=k, f=f, gg=gg, r=r, s=s, t=t:
                                                   commutator(E(a, i, j, r), commutator(E(a, h, k, s), E(b, f, gg, t)))
                                                   + commutator(E(a, i, j, s), commutator(E(a, h, k, r), E(b, f, gg, t))))
            for i in w(a + 1):
                for j in w(a):
                    for h in w(a + 1):
                        for k in w(a):
                            for f in w(b + 1):
                                for gg in w(b):
                                    for r, s, t in triples:
                                        yield Case(pre("pr14", a=a, b=b, i=i, j=j, h=h, k=k, f=f, g=gg,
                                                       r=r, s=s, t=t), "(pr14)",
                                                   lambda a=a, b=b, i=i, j=j, h=h, k=k, f=f, gg=gg, r=r, s=s, t=t:
                                                   commutator(F(a, i, j, r), commutator(F(a, h, k, s), F(b, f, gg, t)))
                                                   + commutator(F(a, i, j, s), commutator(F(a, h, k, r), F(b, f, gg, t))))


# -- root vectors --------------------------------------------------------------------

INDOFK_LEVEL = 3


@suite("root-vectors", "higher root vectors (ter), (indofk), tau action, block quasi-determinants",
       max_n=4)
def root_vector_cases(spec: SuiteSpec) -> Iterator[Case]:
    n, cut = spec.n, spec.cutoff
    tau = MorphismDescriptor("tau")
    for nu in nus(spec):
        m = len(nu)
        g = lambda nu=nu: parabolic_generators(n, nu, cut)
        pre = lambda name, nu=nu, **kw: f"{name}:{fmt(nu=tag(nu), **kw)}"
        w = lambda a, nu=nu: _rng(nu[a - 1])
        for a in range(1, m + 1):
            for b in range(a + 2, m + 1):
                for i in w(a):
                    for j in w(b):
                        yield Case(pre("ter", a=a, b=b, i=i, j=j, kind="E"), "(ter)",
                                   lambda a=a, b=b, i=i, j=j, g=g:
                                   series_diff(g().E(a, b, i, j), g().gauss_E(a, b, i, j)))
                        yield Case(pre("ter", a=a, b=b, i=j, j=i, kind="F"), "(ter)",
                                   lambda a=a, b=b, i=i, j=j, g=g:
                                   series_diff(g().F(a, b, j, i), g().gauss_F(a, b, j, i)))
        for a in range(1, m + 1):
            for b in range(a + 2, m + 1):
                for k in range(2, nu[b - 2] + 1):
                    for i in w(a):
                        for j in w(b):
                            for r in range(1, min(INDOFK_LEVEL, cut) + 1):
                                yield Case(pre("indofk", a=a, b=b, i=i, j=j, k=k, r=r, kind="E"), "(indofk)",
                                           lambda a=a, b=b, i=i, j=j, k=k, r=r, g=g:
                                           root_vector(g(), a, b, i, j, r, k, "E")
                                           - root_vector(g(), a, b, i, j, r, 1, "E"))
                                yield Case(pre("indofk", a=a, b=b, i=j, j=i, k=k, r=r, kind="F"), "(indofk)",
                                           lambda a=a, b=b, i=i, j=j, k=k, r=r, g=g:
                                           root_vector(g(), a, b, j, i, r, k, "F")
                                           - root_vector(g(), a, b, j, i, r, 1, "F"))
        for a in range(1, m + 1):
            for i in w(a):
                for j in w(a):
                    yield Case(pre("tau1", a=a, i=i, j=j), "(tau1)",
                               lambda a=a, i=i, j=j, g=g:
                               series_diff(g().D(a, i, j).map(tau.apply), g().D(a, j, i)))
        for a in range(1, m + 1):
            for b in range(a + 1, m + 1):
                for i in w(a):
                    for j in w(b):
                        yield Case(pre("tau2", a=a, b=b, i=i, j=j), "(tau2)",
                                   lambda a=a, b=b, i=i, j=j, g=g:
                                   series_diff(g().E(a, b, i, j).map(tau.apply), g().F(a, b, j, i)))
                        yield Case(pre("tau3", a=a, b=b, i=j, j=i), "(tau3)",
                                   lambda a=a, b=b, i=i, j=j, g=g:
                                   series_diff(g().F(a, b, j, i).map(tau.apply), g().E(a, b, i, j)))
        for a in range(1, m + 1):
            for b in range(a + 1, m + 1):
                def qd(a=a, b=b, nu=nu, g=g):
                    _, Eq, Fq = block_quasidets(n, nu, cut)
                    yield "E", Eq[(a, b)] - g().gauss.E[(a, b)]
                    yield "F", Fq[(a, b)] - g().gauss.F[(a, b)]
                yield Case(pre("qd23", a=a, b=b), "quasi-determinant E_ab, F_ab", qd)
