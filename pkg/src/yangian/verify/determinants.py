"""Center, quantum determinant and sl-type generator suites."""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence, Tuple

import gmpy2

from ..algebra import Yangian
from ..generators import (
    center_series,
    drinfeld_generators,
    permutation_sign,
    principal_minor,
    quantum_minor,
    sl_generators,
)
from ..morphisms import MorphismDescriptor, antipode, apply_linear_auto, apply_omega, psi_embed
from ..series import Series, series_at, series_invert, series_shift
from .common import fmt, level_tuples, series_diff
from .core import Case, SuiteSpec, suite

MAX_D = 3
HALF = gmpy2.mpq(1, 2)


def _t(idx: Sequence[int]) -> str:
    return "".join(map(str, idx))


def minor(n: int, rows, cols, cut: int, formula: str = "left") -> Series:
    """Quantum minor; the empty minor is 1."""
    if not rows:
        return Series.one(Yangian(n), cut)
    return quantum_minor(n, rows, cols, cut, formula)


def complement(n: int, idx: Sequence[int]) -> Tuple[int, ...]:
    return tuple(x for x in range(1, n + 1) if x not in idx)


def sign_of(full_from: Sequence[int], full_to: Sequence[int]) -> int:
    """Sign of the permutation taking the tuple ``full_from`` to ``full_to``."""
    pos = {v: k for k, v in enumerate(full_from)}
    return permutation_sign([pos[v] for v in full_to])


def subsets(n: int, d: int):
    return list(itertools.combinations(range(1, n + 1), d))


def coeffwise(f, s: Series) -> Series:
    coeffs = [f(c) for c in s.coeffs]
    return Series(coeffs[0].alg, coeffs)


# -- center ----------------------------------------------------------------------------------

@suite("center", "centrality of the quantum determinant and its Drinfeld factorization")
def center_cases(spec: SuiteSpec) -> Iterator[Case]:
    n, cut = spec.n, spec.cutoff
    alg = Yangian(n)
    rng = range(1, n + 1)
    c = lambda: center_series(n, cut)
    for r, s in level_tuples(2, spec.level_bound()):
        for i, j in itertools.product(rng, rng):
            def central(r=r, s=s, i=i, j=j):
                x, t = c()[r], alg.T(i, j, s)
                return x * t - t * x
            yield Case(f"central:{fmt(r=r, i=i, j=j, s=s)}", "C_n^(r) is central", central)
    yield Case(f"cid:n={n}", "Theorem cid",
               lambda: series_diff(center_series(n, cut, "minor"), center_series(n, cut, "product")))


# -- quantum determinants -------------------------------------------------------------------

@suite("qdet", "quantum minors: equivalent formulas, antisymmetry, maps on minors, Drinfeld generators")
def qdet_cases(spec: SuiteSpec) -> Iterator[Case]:
    n, cut = spec.n, spec.cutoff
    tau = MorphismDescriptor("tau")
    sigma = MorphismDescriptor("sigma")
    for d in range(1, min(n, MAX_D) + 1):
        for rows in subsets(n, d):
            for cols in subsets(n, d):
                tag = f"rows={_t(rows)},cols={_t(cols)}"
                yield Case(f"full:{tag}", "(lfull) = (rfull0) = (rfull)",
                           lambda rows=rows, cols=cols: [
                               ("rfull0", series_diff(minor(n, rows, cols, cut), minor(n, rows, cols, cut, "right"))),
                               ("rfull", series_diff(minor(n, rows, cols, cut), minor(n, rows, cols, cut, "rightshift")))])
                if d >= 2:
                    def perm(rows=rows, cols=cols):
                        base = minor(n, rows, cols, cut)
                        for p in itertools.permutations(range(d)):
                            sgn = permutation_sign(p)
                            pr = tuple(rows[k] for k in p)
                            pc = tuple(cols[k] for k in p)
                            for label, other in ((f"rows {_t(pr)}", minor(n, pr, cols, cut)),
                                                 (f"cols {_t(pc)}", minor(n, rows, pc, cut))):
                                yield label, series_diff(other, base if sgn > 0 else -base)
                    yield Case(f"perm:{tag}", "(perm)", perm)
                yield Case(f"tauprop2:{tag}", "(tauprop2)",
                           lambda rows=rows, cols=cols: series_diff(
                               coeffwise(lambda x: apply_linear_auto(tau, x), minor(n, rows, cols, cut)),
                               minor(n, cols, rows, cut)))
                yield Case(f"Sprop:{tag}", "(Sprop)",
                           lambda rows=rows, cols=cols, d=d: series_diff(
                               coeffwise(lambda x: apply_linear_auto(sigma, x), minor(n, rows, cols, cut)),
                               series_at(minor(n, rows, cols, cut), -1, d - 1)))
                yield Case(f"sl:{tag}", "Lemma sl", lambda rows=rows, cols=cols: _lemma_sl(n, rows, cols, cut))
                yield Case(f"S1:{tag}", "Corollary S1", lambda rows=rows, cols=cols: _cor_s1(n, rows, cols, cut))
        if d >= 2:
            for rows in subsets(n, d - 1):
                dup = rows + (rows[-1],)
                cols = tuple(range(1, d + 1))
                yield Case(f"repeated:rows={_t(dup)},cols={_t(cols)}", "minor with a repeated index is 0",
                           lambda dup=dup, cols=cols: minor(n, dup, cols, cut))
    for m in range(1, n):
        k = n - m
        for d in range(1, min(k, 2) + 1):
            for rows in subsets(k, d):
                for cols in subsets(k, d):
                    yield Case(f"gr:{fmt(m=m, k=k)},rows={_t(rows)},cols={_t(cols)}", "Lemma gr",
                               lambda m=m, k=k, rows=rows, cols=cols: _lemma_gr(m, k, rows, cols, cut))
    for i in range(1, n + 1):
        yield Case(f"newd:i={i},D", "Theorem newd (i)", lambda i=i: _newd(n, i, cut, "D"))
        if i < n:
            yield Case(f"newd:i={i},E", "Theorem newd (ii)", lambda i=i: _newd(n, i, cut, "E"))
            yield Case(f"newd:i={i},F", "Theorem newd (iii)", lambda i=i: _newd(n, i, cut, "F"))


def _complement_data(n: int, rows, cols):
    rc, cc = complement(n, rows), complement(n, cols)
    eps = sign_of(tuple(range(1, n + 1)), rows + rc) * sign_of(tuple(range(1, n + 1)), cols + cc)
    return rc, cc, eps


def _lemma_sl(n: int, rows, cols, cut: int) -> Series:
    rc, cc, eps = _complement_data(n, rows, cols)
    lhs = coeffwise(lambda x: apply_omega(n, x, cut), minor(n, rows, cols, cut))
    c = series_at(center_series(n, cut), -1, n - 1)
    rhs = series_invert(c) * series_at(minor(n, cc, rc, cut), -1, n - 1)
    return series_diff(lhs, rhs if eps > 0 else -rhs)


def _cor_s1(n: int, rows, cols, cut: int) -> Series:
    d = len(rows)
    rc, cc, eps = _complement_data(n, rows, cols)
    lhs = coeffwise(lambda x: antipode(n, x, cut), minor(n, rows, cols, cut))
    c = series_shift(center_series(n, cut), -(n - d))
    rhs = series_invert(c) * series_shift(minor(n, cc, rc, cut), -(n - d))
    return series_diff(lhs, rhs if eps > 0 else -rhs)


def _lemma_gr(m: int, k: int, rows, cols, cut: int) -> Series:
    lhs = coeffwise(lambda x: psi_embed(m, x, cut), minor(k, rows, cols, cut))
    head = tuple(range(1, m + 1))
    big_rows = head + tuple(m + x for x in rows)
    big_cols = head + tuple(m + x for x in cols)
    rhs = (series_invert(series_shift(principal_minor(m + k, m, cut), -m))
           * series_shift(minor(m + k, big_rows, big_cols, cut), -m))
    return series_diff(lhs, rhs)


def _newd(n: int, i: int, cut: int, which: str) -> Series:
    dr = drinfeld_generators(n, cut)
    sh = lambda s: series_shift(s, -(i - 1))
    q_prev = sh(principal_minor(n, i - 1, cut))
    q = sh(principal_minor(n, i, cut))
    if which == "D":
        return series_diff(dr.D(i), series_invert(q_prev) * q)
    top = tuple(range(1, i + 1))
    swapped = tuple(range(1, i)) + (i + 1,)
    if which == "E":
        return series_diff(dr.E(i), series_invert(q) * sh(minor(n, top, swapped, cut)))
    return series_diff(dr.F(i), sh(minor(n, swapped, top, cut)) * series_invert(q))


# -- sl-type generators ---------------------------------------------------------------------

def cartan(i: int, j: int) -> int:
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


@suite("sl", "Drinfeld's sl_n relations for kappa and xi, and their quantum-determinant forms")
def sl_cases(spec: SuiteSpec) -> Iterator[Case]:
    """Relation instances use ``k + l (+ ...)`` at most ``cutoff - 2``."""
    n, cut = spec.n, spec.cutoff
    nodes = range(1, n)
    g = lambda i: sl_generators(n, i, cut)
    kap = lambda i, k: g(i).kappa_coeff(k)
    xi = lambda s, i, k: g(i).xi(s, k)
    signs = ((1, "+"), (-1, "-"))
    bound = spec.level_bound(2)
    pairs = [(k, l) for k in range(bound + 1) for l in range(bound + 1) if k + l <= bound]

    for i in nodes:
        yield Case(f"qdet-form:i={i}", "kappa and xi through quantum minors",
                   lambda i=i: [("kappa", series_diff(g(i).kappa, g(i).kappa_qdet)),
                                ("xi+", series_diff(g(i).xi_plus, g(i).xi_plus_qdet)),
                                ("xi-", series_diff(g(i).xi_minus, g(i).xi_minus_qdet))])

    for i, j in itertools.product(nodes, nodes):
        a = cartan(i, j)
        for k, l in pairs:
            ij = fmt(i=i, j=j, k=k, l=l)
            yield Case(f"dr1:{ij}", "(dr1)",
                       lambda i=i, j=j, k=k, l=l: kap(i, k) * kap(j, l) - kap(j, l) * kap(i, k))
            yield Case(f"dr2:{ij}", "(dr2)",
                       lambda i=i, j=j, k=k, l=l: xi(1, i, k) * xi(-1, j, l) - xi(-1, j, l) * xi(1, i, k)
                       - (kap(i, k + l) if i == j else 0))
            for s, sg in signs:
                ijs = f"{ij},sign={sg}"
                if k == 0:
                    yield Case(f"dr3:{fmt(i=i, j=j, l=l)},sign={sg}", "(dr3)",
                               lambda i=i, j=j, l=l, s=s, a=a: kap(i, 0) * xi(s, j, l) - xi(s, j, l) * kap(i, 0)
                               - xi(s, j, l).scale(s * a))

                def dr4(i=i, j=j, k=k, l=l, s=s, a=a):
                    lhs = (kap(i, k) * xi(s, j, l + 1) - xi(s, j, l + 1) * kap(i, k)
                           - kap(i, k + 1) * xi(s, j, l) + xi(s, j, l) * kap(i, k + 1))
                    rhs = (kap(i, k) * xi(s, j, l) + xi(s, j, l) * kap(i, k)).scale(s * a * HALF)
                    return lhs - rhs
                yield Case(f"dr4:{ijs}", "(dr4)", dr4)

                def eg(i=i, j=j, k=k, l=l, s=s, a=a):
                    lhs = (xi(s, i, k) * xi(s, j, l + 1) - xi(s, j, l + 1) * xi(s, i, k)
                           - xi(s, i, k + 1) * xi(s, j, l) + xi(s, j, l) * xi(s, i, k + 1))
                    rhs = (xi(s, i, k) * xi(s, j, l) + xi(s, j, l) * xi(s, i, k)).scale(s * a * HALF)
                    return lhs - rhs
                yield Case(f"eg:{ijs}", "(eg)", eg)

    for i, j in itertools.product(nodes, nodes):
        if i == j:
            continue
        big_n = 1 - cartan(i, j)
        for ks in itertools.product(range(bound + 1), repeat=big_n + 1):
            if sum(ks) > bound or list(ks[:-1]) != sorted(ks[:-1]):
                continue
            *kk, l = ks
            for s, sg in signs:
                def drn(i=i, j=j, kk=tuple(kk), l=l, s=s):
                    out = None
                    for p in set(itertools.permutations(kk)):
                        x = xi(s, j, l)
                        for k in reversed(p):
                            y = xi(s, i, k)
                            x = y * x - x * y
                        out = x if out is None else out + x
                    return out
                yield Case(f"drn:{fmt(i=i, j=j, k=_t(kk), l=l)},sign={sg}", "(drn)", drn)
