"""Bounded-degree PBW independence for the D, E and F generating sets."""

from __future__ import annotations

from typing import Iterator, List, Tuple

from ..algebra import Element, Yangian
from ..generators import parabolic_generators
from .common import exact_rank, nus, tag
from .core import Case, SuiteSpec, suite
from .maps import ordered_monomials

PARTS = ("i", "ii", "iii", "iv")


def generating_set(n: int, nu, cut: int, degree: int, part: str) -> List[Tuple[int, Element]]:
    """``(level, element)`` pairs in a fixed order: D's, then E's, then F's."""
    g = parabolic_generators(n, tuple(nu), cut)
    m = len(nu)
    out = []
    levels = range(1, degree + 1)
    if part in ("i", "iv"):
        out += [(r, g.D(a, i, j)[r]) for a in range(1, m + 1) for i in range(1, nu[a - 1] + 1)
                for j in range(1, nu[a - 1] + 1) for r in levels]
    if part in ("ii", "iv"):
        out += [(r, g.E(a, b, i, j)[r]) for a in range(1, m + 1) for b in range(a + 1, m + 1)
                for i in range(1, nu[a - 1] + 1) for j in range(1, nu[b - 1] + 1) for r in levels]
    if part in ("iii", "iv"):
        out += [(r, g.F(a, b, i, j)[r]) for a in range(1, m + 1) for b in range(a + 1, m + 1)
                for i in range(1, nu[b - 1] + 1) for j in range(1, nu[a - 1] + 1) for r in levels]
    return out


def independence(n: int, nu, cut: int, degree: int, part: str):
    gens = generating_set(n, nu, cut, degree, part)
    alg = Yangian(n)
    words = ordered_monomials(range(len(gens)), lambda k: gens[k][0], degree)
    vectors = []
    for w in words:
        x = alg.one()
        for k in w:
            x = x * gens[k][1]
        vectors.append(x.terms)
    rank = exact_rank(vectors)
    if rank != len(words):
        return f"rank {rank} < {len(words)} ordered monomials"
    return None


@suite("pbw-independence", "ordered monomials in D, E, F are linearly independent up to a degree")
def pbw_cases(spec: SuiteSpec) -> Iterator[Case]:
    """The canonical-degree bound is the level bound (``cutoff`` by default)."""
    n, cut = spec.n, spec.cutoff
    degree = spec.level_bound()
    for nu in nus(spec):
        name = "triangular" if all(x == 1 for x in nu) else "thmB"
        ref = "Theorem triangular" if name == "triangular" else "Theorem B"
        for part in PARTS:
            yield Case(f"{name}.{part}:nu={tag(nu)},deg={degree}", f"{ref} ({part})",
                       lambda nu=nu, part=part: independence(n, nu, cut, degree, part))
