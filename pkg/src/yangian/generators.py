"""Distinguished elements of the Yangian: parabolic and Drinfeld generators,
higher root vectors, quantum minors, the central series and the sl-type
generators with their half-integer shifts."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import gmpy2

from .algebra import Element, Yangian, commutator, rational
from .series import (
    GaussFactors,
    Series,
    SeriesMatrix,
    check_composition,
    gauss_factorize,
    series_invert,
    series_shift,
)

MAX_MINOR_SIZE = 4


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct sortable items."""
    perm = list(perm)
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


class ParabolicGenerators:
    """Generators of ``Y_n`` attached to a composition ``nu``.

    ``D(a, i, j)``, ``Dt(a, i, j)``, ``E(a, b, i, j)`` and ``F(a, b, i, j)``
    return Series with 1-based block and entry labels.  ``E(a, b, ...)`` with
    ``b = a + 1`` (or the shorthand ``Ea``) comes straight from the Gauss
    factorization; the higher root vectors ``b > a + 1`` are built with the
    commutator recursion using ``k = 1``.
    """

    def __init__(self, n: int, nu: Sequence[int], cutoff: int):
        self.n = n
        self.nu = check_composition(nu, n)
        self.cutoff = cutoff
        self.alg = Yangian(n)
        self.gauss: GaussFactors = gauss_factorize(SeriesMatrix.t_matrix(self.alg, cutoff), self.nu)
        self._root: Dict[tuple, Series] = {}

    @property
    def m(self) -> int:
        return len(self.nu)

    def _check(self, a: int, i: int, j: int, rows: int, cols: int) -> None:
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise IndexError(f"entry ({i},{j}) outside a {rows}x{cols} block")

    def D(self, a: int, i: int, j: int) -> Series:
        blk = self.gauss.D[a]
        self._check(a, i, j, *blk.shape)
        return blk.rows[i - 1][j - 1]

    def Dt(self, a: int, i: int, j: int) -> Series:
        blk = self.gauss.Dt[a]
        self._check(a, i, j, *blk.shape)
        return blk.rows[i - 1][j - 1]

    def E(self, a: int, b: int, i: int, j: int) -> Series:
        if not 1 <= a < b <= self.m:
            raise IndexError(f"no E block ({a},{b}) for composition {self.nu}")
        self._check(a, i, j, self.nu[a - 1], self.nu[b - 1])
        if b == a + 1:
            return self.gauss.E[(a, b)].rows[i - 1][j - 1]
        key = ("E", a, b, i, j)
        if key not in self._root:
            coeffs = [self.alg.zero()] + [root_vector(self, a, b, i, j, r, 1, "E")
                                          for r in range(1, self.cutoff + 1)]
            self._root[key] = Series(self.alg, coeffs)
        return self._root[key]

    def F(self, a: int, b: int, i: int, j: int) -> Series:
        if not 1 <= a < b <= self.m:
            raise IndexError(f"no F block ({a},{b}) for composition {self.nu}")
        self._check(a, i, j, self.nu[b - 1], self.nu[a - 1])
        if b == a + 1:
            return self.gauss.F[(a, b)].rows[i - 1][j - 1]
        key = ("F", a, b, i, j)
        if key not in self._root:
            coeffs = [self.alg.zero()] + [root_vector(self, a, b, i, j, r, 1, "F")
                                          for r in range(1, self.cutoff + 1)]
            self._root[key] = Series(self.alg, coeffs)
        return self._root[key]

    def Ea(self, a: int, i: int, j: int) -> Series:
        return self.E(a, a + 1, i, j)

    def Fa(self, a: int, i: int, j: int) -> Series:
        return self.F(a, a + 1, i, j)

    def gauss_E(self, a: int, b: int, i: int, j: int) -> Series:
        """``E_{a,b;i,j}(u)`` read off the factorization (any ``a < b``)."""
        return self.gauss.E[(a, b)].rows[i - 1][j - 1]

    def gauss_F(self, a: int, b: int, i: int, j: int) -> Series:
        return self.gauss.F[(a, b)].rows[i - 1][j - 1]


@lru_cache(maxsize=None)
def parabolic_generators(n: int, nu: Tuple[int, ...], cutoff: int) -> ParabolicGenerators:
    return ParabolicGenerators(n, tuple(nu), cutoff)


class DrinfeldGenerators:
    """The ``nu = (1^n)`` generators with the usual single-index names."""

    def __init__(self, n: int, cutoff: int):
        self.n = n
        self.cutoff = cutoff
        self.par = parabolic_generators(n, (1,) * n, cutoff)
        self.alg = self.par.alg

    def D(self, i: int) -> Series:
        return self.par.D(i, 1, 1)

    def Dt(self, i: int) -> Series:
        return self.par.Dt(i, 1, 1)

    def E(self, i: int, j: int = 0) -> Series:
        return self.par.E(i, j or i + 1, 1, 1)

    def F(self, i: int, j: int = 0) -> Series:
        return self.par.F(i, j or i + 1, 1, 1)


@lru_cache(maxsize=None)
def drinfeld_generators(n: int, cutoff: int) -> DrinfeldGenerators:
    return DrinfeldGenerators(n, cutoff)


def root_vector(gens: ParabolicGenerators, a: int, b: int, i: int, j: int, r: int, k: int,
                kind: str = "E") -> Element:
    """``E_{a,b;i,j}^{(r)} = [E_{a,b-1;i,k}^{(r)}, E_{b-1;k,j}^{(1)}]`` and the mirrored
    ``F_{a,b;i,j}^{(r)} = [F_{b-1;i,k}^{(1)}, F_{a,b-1;k,j}^{(r)}]``."""
    if not 1 <= a < b <= gens.m:
        raise IndexError(f"no root vector for blocks ({a},{b})")
    if r < 1:
        raise IndexError("root vectors start at level 1")
    if kind == "E":
        if b == a + 1:
            return gens.Ea(a, i, j)[r]
        if not 1 <= k <= gens.nu[b - 2]:
            raise IndexError(f"k={k} outside block {b - 1}")
        return commutator(gens.E(a, b - 1, i, k)[r], gens.Ea(b - 1, k, j)[1])
    if kind == "F":
        if b == a + 1:
            return gens.Fa(a, i, j)[r]
        if not 1 <= k <= gens.nu[b - 2]:
            raise IndexError(f"k={k} outside block {b - 1}")
        return commutator(gens.Fa(b - 1, i, k)[1], gens.F(a, b - 1, k, j)[r])
    raise ValueError(f"kind must be 'E' or 'F', not {kind!r}")


# -- quantum minors --------------------------------------------------------------

@lru_cache(maxsize=None)
def _shifted_t(n: int, i: int, j: int, cutoff: int, c) -> Series:
    """``T_{i,j}(u - c)``."""
    return series_shift(Series.t_entry(Yangian(n), i, j, cutoff), c)


def _product(factors: List[Series]) -> Series:
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


def quantum_minor(n: int, rows: Sequence[int], cols: Sequence[int], cutoff: int,
                  formula: str = "left", max_size: int = MAX_MINOR_SIZE) -> Series:
    """Quantum minor ``T_{rows, cols}(u)`` as a permutation sum.

    ``left``: ``sum sgn(p) T_{i_p1,j_1}(u) T_{i_p2,j_2}(u-1) ... T_{i_pd,j_d}(u-d+1)``;
    ``right``: ``sum sgn(p) T_{i_d,j_pd}(u-d+1) ... T_{i_1,j_p1}(u)``;
    ``rightshift``: ``sum sgn(p) T_{i_1,j_p1}(u-d+1) ... T_{i_d,j_pd}(u)``.
    """
    rows, cols = tuple(rows), tuple(cols)
    d = len(rows)
    if d != len(cols):
        raise ValueError("row and column tuples differ in length")
    if d < 1:
        raise ValueError("minor needs at least one index")
    if d > max_size:
        raise ValueError(f"minor of size {d} exceeds limit {max_size}")
    if any(not 1 <= x <= n for x in rows + cols):
        raise IndexError(f"minor indices outside 1..{n}")
    alg = Yangian(n)
    total = Series.zero(alg, cutoff)
    for perm in itertools.permutations(range(d)):
        sign = permutation_sign(perm)
        if formula == "left":
            factors = [_shifted_t(n, rows[perm[q]], cols[q], cutoff, q) for q in range(d)]
        elif formula == "right":
            factors = [_shifted_t(n, rows[q], cols[perm[q]], cutoff, q) for q in reversed(range(d))]
        elif formula == "rightshift":
            factors = [_shifted_t(n, rows[q], cols[perm[q]], cutoff, d - 1 - q) for q in range(d)]
        else:
            raise ValueError(f"unknown formula {formula!r}")
        term = _product(factors)
        total = total + term if sign > 0 else total - term
    return total


@lru_cache(maxsize=None)
def principal_minor(n: int, size: int, cutoff: int) -> Series:
    """``T_{(1..size),(1..size)}(u)`` in ``Y_n``; ``size = 0`` gives 1."""
    if size == 0:
        return Series.one(Yangian(n), cutoff)
    idx = tuple(range(1, size + 1))
    return quantum_minor(n, idx, idx, cutoff)


def center_series(n: int, cutoff: int, method: str = "minor") -> Series:
    """``C_n(u)``: the quantum determinant, or ``D_1(u) D_2(u-1) ... D_n(u-n+1)``."""
    if method == "minor":
        return principal_minor(n, n, cutoff)
    if method == "product":
        dr = drinfeld_generators(n, cutoff)
        return _product([series_shift(dr.D(i), i - 1) for i in range(1, n + 1)])
    raise ValueError(f"unknown method {method!r}")


# -- sl-type generators ------------------------------------------------------------

@dataclass
class SlGenerators:
    """``kappa_i(u)``, ``xi_i^+(u)``, ``xi_i^-(u)`` for one node ``i``.

    The coefficient named ``kappa_{i,k}`` is ``kappa[k + 1]`` (series in
    ``u^{-k-1}``); likewise for ``xi``.  ``a``, ``b``, ``c`` are the shifted
    quantum minors, and the ``*_qdet`` series are the same generating
    functions expressed through them.
    """

    i: int
    kappa: Series
    xi_plus: Series
    xi_minus: Series
    a: Series
    b: Series
    c: Series
    kappa_qdet: Series
    xi_plus_qdet: Series
    xi_minus_qdet: Series

    def kappa_coeff(self, k: int) -> Element:
        return self.kappa[k + 1]

    def xi(self, sign: int, k: int) -> Element:
        return (self.xi_plus if sign > 0 else self.xi_minus)[k + 1]


def _a_minor(n: int, i: int, cutoff: int, extra=0) -> Series:
    """``a_i(u + extra)`` with ``a_i(u) = T_{(1..i),(1..i)}(u + (i-1)/2)``."""
    shift = gmpy2.mpq(i - 1, 2) + rational(extra)
    return series_shift(principal_minor(n, i, cutoff), -shift)


@lru_cache(maxsize=None)
def sl_generators(n: int, i: int, cutoff: int) -> SlGenerators:
    if not 1 <= i <= n - 1:
        raise IndexError(f"node {i} outside 1..{n - 1}")
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    dr = drinfeld_generators(n, cutoff)
    c = gmpy2.mpq(i - 1, 2)
    kappa = 1 + series_shift(dr.Dt(i), c) * series_shift(dr.D(i + 1), c)
    xi_plus = series_shift(dr.E(i), c)
    xi_minus = series_shift(dr.F(i), c)

    half = gmpy2.mpq(1, 2)
    a = _a_minor(n, i, cutoff)
    a_up = _a_minor(n, i, cutoff, 1)
    a_prev = _a_minor(n, i - 1, cutoff, half)
    a_next = _a_minor(n, i + 1, cutoff, half)
    rows = tuple(range(1, i + 1))
    swapped = tuple(range(1, i)) + (i + 1,)
    b = series_shift(quantum_minor(n, rows, swapped, cutoff), -c)
    cc = series_shift(quantum_minor(n, swapped, rows, cutoff), -c)
    a_inv = series_invert(a)
    kappa_qdet = 1 - a_inv * series_invert(a_up) * a_prev * a_next
    return SlGenerators(i, kappa, xi_plus, xi_minus, a, b, cc, kappa_qdet, a_inv * b, cc * a_inv)


# -- text addressing ---------------------------------------------------------------

_ADDRESS = re.compile(
    r"^\s*(?:"
    r"(?P<d>Dt|D)\[\s*(?P<da>\d+)\s*;\s*(?P<di>\d+)\s*,\s*(?P<dj>\d+)\s*;\s*(?P<dr>\d+)\s*\]"
    r"|(?P<ef>E|F)\[\s*(?P<a>\d+)\s*,\s*(?P<b>\d+)\s*;\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*;\s*(?P<r>\d+)\s*\]"
    r"|C\[\s*(?P<cr>\d+)\s*\]"
    r"|minor\(\s*(?P<rows>[\d\s]+)\|(?P<cols>[\d\s]+)\)\[\s*(?P<mr>\d+)\s*\]"
    r"|T\[\s*(?P<ti>\d+)\s*,\s*(?P<tj>\d+)\s*;\s*(?P<tr>\d+)\s*\]"
    r")\s*$"
)


def lookup_generator(text: str, n: int, nu: Sequence[int], cutoff: int) -> Element:
    """Resolve addresses such as ``E[1,2;1,1;3]``, ``D[2;1,1;2]``, ``C[2]`` or
    ``minor(1 2|1 2)[1]`` to their PBW expansion in ``Y_n``."""
    m = _ADDRESS.match(text)
    if m is None:
        raise ValueError(f"cannot parse generator address {text!r}")
    if m.group("d"):
        r = int(m.group("dr"))
        _need(r, cutoff)
        gens = parabolic_generators(n, tuple(nu), cutoff)
        getter = gens.Dt if m.group("d") == "Dt" else gens.D
        return getter(int(m.group("da")), int(m.group("di")), int(m.group("dj")))[r]
    if m.group("ef"):
        r = int(m.group("r"))
        _need(r, cutoff)
        gens = parabolic_generators(n, tuple(nu), cutoff)
        getter = gens.E if m.group("ef") == "E" else gens.F
        args = (int(m.group(x)) for x in ("a", "b", "i", "j"))
        return getter(*args)[r]
    if m.group("cr"):
        r = int(m.group("cr"))
        _need(r, cutoff)
        return center_series(n, cutoff)[r]
    if m.group("mr"):
        r = int(m.group("mr"))
        _need(r, cutoff)
        rows = tuple(int(x) for x in m.group("rows").split())
        cols = tuple(int(x) for x in m.group("cols").split())
        return quantum_minor(n, rows, cols, cutoff)[r]
    return Yangian(n).T(int(m.group("ti")), int(m.group("tj")), int(m.group("tr")))


def _need(r: int, cutoff: int) -> None:
    if r > cutoff:
        raise ValueError(f"level {r} exceeds cutoff {cutoff}")
