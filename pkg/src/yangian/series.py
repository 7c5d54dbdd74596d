"""Truncated power series in u^{-1} over a presented algebra, and matrices of them.

A :class:`Series` stores coefficients ``c_0 .. c_N`` (``c_k`` multiplies
``u^{-k}``) as normalized Elements; ``N`` is the cutoff.  Binary operations
truncate to the smaller cutoff, and asking for a coefficient past the cutoff
is an error rather than a silent zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Sequence, Tuple

import gmpy2

from .algebra import Algebra, Element, rational


class TruncationError(IndexError):
    """Coefficient requested beyond the known cutoff."""


class NotInvertible(ArithmeticError):
    pass


class Series:
    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: Algebra, coeffs: Sequence[Element]):
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        self.alg = alg
        self.coeffs = list(coeffs)

    # -- construction -------------------------------------------------------

    @classmethod
    def constant(cls, alg: Algebra, c, cutoff: int) -> "Series":
        head = c if isinstance(c, Element) else alg.scalar(c)
        return cls(alg, [head] + [alg.zero() for _ in range(cutoff)])

    @classmethod
    def zero(cls, alg: Algebra, cutoff: int) -> "Series":
        return cls.constant(alg, 0, cutoff)

    @classmethod
    def one(cls, alg: Algebra, cutoff: int) -> "Series":
        return cls.constant(alg, 1, cutoff)

    @classmethod
    def t_entry(cls, alg: Algebra, i: int, j: int, cutoff: int) -> "Series":
        """``T_{i,j}(u)`` in a Yangian."""
        return cls(alg, [alg.T(i, j, r) for r in range(cutoff + 1)])

    # -- access -------------------------------------------------------------

    @property
    def cutoff(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Element:
        if k < 0:
            return self.alg.zero()
        if k > self.cutoff:
            raise TruncationError(f"coefficient u^-{k} requested, cutoff is {self.cutoff}")
        return self.coeffs[k]

    def truncate(self, cutoff: int) -> "Series":
        if cutoff > self.cutoff:
            raise TruncationError(f"cannot extend cutoff {self.cutoff} to {cutoff}")
        return Series(self.alg, self.coeffs[: cutoff + 1])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.alg == other.alg and self.coeffs == other.coeffs

    __hash__ = None

    # -- ring operations ----------------------------------------------------

    def _pair(self, other: "Series") -> int:
        if other.alg != self.alg:
            raise ValueError(f"series over {self.alg!r} and {other.alg!r}")
        return min(self.cutoff, other.cutoff)

    def __add__(self, other) -> "Series":
        if not isinstance(other, Series):
            other = Series.constant(self.alg, other, self.cutoff)
        n = self._pair(other)
        return Series(self.alg, [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(self.alg, [-c for c in self.coeffs])

    def __sub__(self, other) -> "Series":
        return self + (-other)

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def scale(self, c) -> "Series":
        return Series(self.alg, [x.scale(c) for x in self.coeffs])

    def __mul__(self, other) -> "Series":
        if isinstance(other, Series):
            return series_mul(self, other)
        if isinstance(other, Element):
            return Series(self.alg, [c * other for c in self.coeffs])
        return self.scale(other)

    def __rmul__(self, other) -> "Series":
        if isinstance(other, Element):
            return Series(self.alg, [other * c for c in self.coeffs])
        return self.scale(other)

    def map(self, fn) -> "Series":
        return Series(self.alg, [fn(c) for c in self.coeffs])

    def __str__(self) -> str:
        parts = [f"({self.coeffs[0]})"]
        parts += [f"({c})u^-{k}" for k, c in enumerate(self.coeffs) if k and not c.is_zero()]
        return " + ".join(parts) + f" (cutoff {self.cutoff})"

    def __repr__(self) -> str:
        return f"Series({self})"


def series_mul(f: Series, g: Series) -> Series:
    """Cauchy product, ``f`` kept on the left of ``g``."""
    n = f._pair(g)
    alg = f.alg
    out = []
    for k in range(n + 1):
        acc = alg.zero()
        for a in range(k + 1):
            x, y = f.coeffs[a], g.coeffs[k - a]
            if x.terms and y.terms:
                acc = acc + x * y
        out.append(acc)
    return Series(alg, out)


def _scalar_unit(c: Element):
    if set(c.terms) - {()}:
        raise NotInvertible("constant term is not a scalar")
    value = c.scalar_part()
    if not value:
        raise NotInvertible("constant term is zero")
    return value


def series_invert(f: Series) -> Series:
    """Two-sided inverse of a series whose constant term is a nonzero rational.

    ``g_0 = 1/c_0`` and ``g_k = -(1/c_0) sum_{a=1..k} c_a g_{k-a}``.
    """
    inv0 = 1 / _scalar_unit(f.coeffs[0])
    alg = f.alg
    g = [alg.scalar(inv0)]
    for k in range(1, f.cutoff + 1):
        acc = alg.zero()
        for a in range(1, k + 1):
            x = f.coeffs[a]
            if x.terms and g[k - a].terms:
                acc = acc + x * g[k - a]
        g.append(acc.scale(-inv0))
    return Series(alg, g)


def series_shift(f: Series, c) -> Series:
    """``f(u - c)``, re-expanded in ``u^{-1}`` with
    ``(u - c)^{-r} = sum_k binom(r + k - 1, k) c^k u^{-r-k}``."""
    c = rational(c)
    if not c:
        return f
    alg = f.alg
    out = [f.coeffs[0]]
    for m in range(1, f.cutoff + 1):
        acc = alg.zero()
        for r in range(1, m + 1):
            x = f.coeffs[r]
            if x.terms:
                acc = acc + x.scale(comb(m - 1, m - r) * c ** (m - r))
        out.append(acc)
    return Series(alg, out)


def series_reflect(f: Series) -> Series:
    """``f(-u)``."""
    return Series(f.alg, [c if k % 2 == 0 else -c for k, c in enumerate(f.coeffs)])


def series_at(f: Series, sign: int, c) -> Series:
    """``f(sign * u + c)`` for ``sign`` in {1, -1}."""
    if sign == 1:
        return series_shift(f, -rational(c))
    if sign == -1:
        return series_shift(series_reflect(f), rational(c))
    raise ValueError("sign must be +1 or -1")


# -- matrices ------------------------------------------------------------------

class SeriesMatrix:
    """Rectangular grid of Series with a common algebra and cutoff."""

    __slots__ = ("alg", "rows")

    def __init__(self, alg: Algebra, rows: Sequence[Sequence[Series]]):
        self.alg = alg
        self.rows = [list(r) for r in rows]
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise ValueError("ragged matrix")

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def cutoff(self) -> int:
        return min(s.cutoff for r in self.rows for s in r)

    def __getitem__(self, ij) -> Series:
        i, j = ij
        return self.rows[i][j]

    @classmethod
    def identity(cls, alg: Algebra, size: int, cutoff: int) -> "SeriesMatrix":
        return cls(alg, [[Series.constant(alg, 1 if i == j else 0, cutoff) for j in range(size)]
                         for i in range(size)])

    @classmethod
    def zeros(cls, alg: Algebra, rows: int, cols: int, cutoff: int) -> "SeriesMatrix":
        return cls(alg, [[Series.zero(alg, cutoff) for _ in range(cols)] for _ in range(rows)])

    @classmethod
    def t_matrix(cls, alg: Algebra, cutoff: int) -> "SeriesMatrix":
        """The generating matrix ``T(u)`` of ``Yangian(n)``."""
        n = alg.n
        return cls(alg, [[Series.t_entry(alg, i, j, cutoff) for j in range(1, n + 1)]
                         for i in range(1, n + 1)])

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "SeriesMatrix":
        return SeriesMatrix(self.alg, [row[c0:c1] for row in self.rows[r0:r1]])

    def map(self, fn) -> "SeriesMatrix":
        return SeriesMatrix(self.alg, [[fn(s) for s in row] for row in self.rows])

    def coefficient(self, k: int) -> List[List[Element]]:
        return [[s[k] for s in row] for row in self.rows]

    def __add__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return SeriesMatrix(self.alg, [[a + b for a, b in zip(r, s)]
                                       for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "SeriesMatrix":
        return self.map(lambda s: -s)

    def __sub__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        return self + (-other)

    def __mul__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        return matrix_mul(self, other)

    def is_zero(self) -> bool:
        return all(s.is_zero() for row in self.rows for s in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None

    def format(self, composition: Sequence[int] = ()) -> str:
        cuts = set()
        acc = 0
        for part in composition:
            acc += part
            cuts.add(acc)
        lines = []
        for i, row in enumerate(self.rows):
            if i in cuts and i < len(self.rows):
                lines.append("-" * 8)
            cells = []
            for j, s in enumerate(row):
                if j in cuts and j:
                    cells.append("|")
                cells.append(str(s))
            lines.append("  ".join(cells))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.format()


def matrix_mul(a: SeriesMatrix, b: SeriesMatrix) -> SeriesMatrix:
    (p, q), (q2, r) = a.shape, b.shape
    if q != q2:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    cutoff = min(a.cutoff, b.cutoff)
    alg = a.alg
    rows = []
    for i in range(p):
        row = []
        for j in range(r):
            acc = Series.zero(alg, cutoff)
            for k in range(q):
                if not a.rows[i][k].is_zero() and not b.rows[k][j].is_zero():
                    acc = acc + a.rows[i][k] * b.rows[k][j]
            row.append(acc)
        rows.append(row)
    return SeriesMatrix(alg, rows)


def matrix_invert(m: SeriesMatrix) -> SeriesMatrix:
    """Two-sided inverse of a square series matrix with scalar-invertible pivots.

    Gauss-Jordan elimination on ``[M | I]`` by left row operations.  Every
    pivot keeps a rational, nonzero constant term when the constant-term
    matrix is the identity, so no pivot search is made.
    """
    size, cols = m.shape
    if size != cols:
        raise ValueError("matrix_invert needs a square matrix")
    alg = m.alg
    cutoff = m.cutoff
    left = [[s.truncate(cutoff) for s in row] for row in m.rows]
    right = SeriesMatrix.identity(alg, size, cutoff).rows
    for k in range(size):
        try:
            pinv = series_invert(left[k][k])
        except NotInvertible as exc:
            raise NotInvertible(f"pivot {k} is not a unit: {exc}") from None
        left[k] = [pinv * s for s in left[k]]
        right[k] = [pinv * s for s in right[k]]
        for i in range(size):
            if i == k or left[i][k].is_zero():
                continue
            factor = left[i][k]
            left[i] = [a - factor * b if not b.is_zero() else a for a, b in zip(left[i], left[k])]
            right[i] = [a - factor * b if not b.is_zero() else a for a, b in zip(right[i], right[k])]
    return SeriesMatrix(alg, right)


def quasi_det(a: SeriesMatrix, b: SeriesMatrix, c: SeriesMatrix, d: SeriesMatrix) -> SeriesMatrix:
    """Gelfand-Retakh quasi-determinant ``D - C A^{-1} B``."""
    m, m2 = a.shape
    if m != m2:
        raise ValueError("A must be square")
    if b.shape[0] != m or c.shape[1] != m or d.shape != (c.shape[0], b.shape[1]):
        raise ValueError("blocks are not conformable")
    if m == 0:
        return d
    return d - c * (matrix_invert(a) * b)


def quasi_det_entry(t: SeriesMatrix, rows: Sequence[int], cols: Sequence[int],
                    row: int, col: int) -> Series:
    """The 1x1 quasi-determinant of ``t`` bordered by ``rows``/``cols``
    (0-based indices) with distinguished entry ``(row, col)``."""
    a = SeriesMatrix(t.alg, [[t.rows[i][j] for j in cols] for i in rows])
    b = SeriesMatrix(t.alg, [[t.rows[i][col]] for i in rows])
    c = SeriesMatrix(t.alg, [[t.rows[row][j] for j in cols]])
    d = SeriesMatrix(t.alg, [[t.rows[row][col]]])
    if not rows:
        return d.rows[0][0]
    return quasi_det(a, b, c, d).rows[0][0]


# -- Gauss factorization ---------------------------------------------------------

def check_composition(nu: Sequence[int], n: int) -> Tuple[int, ...]:
    nu = tuple(int(x) for x in nu)
    if not nu or any(x < 1 for x in nu):
        raise ValueError(f"composition {nu} must consist of positive integers")
    if sum(nu) != n:
        raise ValueError(f"composition {nu} does not sum to {n}")
    return nu


@dataclass
class GaussFactors:
    """Block LDU data ``T = F D E`` for a composition ``nu``.

    ``D[a]`` is the a-th diagonal block, ``Dt[a] = -D[a]^{-1}``;
    ``E[(a, b)]`` (``a < b``) sits in block position (a, b) of E and
    ``F[(a, b)]`` in block position (b, a) of F.  Block labels are 1-based.
    """

    nu: Tuple[int, ...]
    D: Dict[int, SeriesMatrix]
    Dt: Dict[int, SeriesMatrix]
    E: Dict[Tuple[int, int], SeriesMatrix] = field(default_factory=dict)
    F: Dict[Tuple[int, int], SeriesMatrix] = field(default_factory=dict)

    @property
    def offsets(self) -> List[int]:
        out, acc = [], 0
        for part in self.nu:
            out.append(acc)
            acc += part
        return out

    def _assemble(self, alg, cutoff, fill) -> SeriesMatrix:
        n = sum(self.nu)
        full = SeriesMatrix.zeros(alg, n, n, cutoff).rows
        off = self.offsets
        for (a, b), blk in fill:
            for i, row in enumerate(blk.rows):
                for j, s in enumerate(row):
                    full[off[a - 1] + i][off[b - 1] + j] = s
        return SeriesMatrix(alg, full)

    def matrices(self) -> Tuple[SeriesMatrix, SeriesMatrix, SeriesMatrix]:
        """Full ``(F, D, E)`` matrices."""
        some = self.D[1]
        alg, cutoff = some.alg, some.cutoff
        m = len(self.nu)
        eye = {a: SeriesMatrix.identity(alg, self.nu[a - 1], cutoff) for a in range(1, m + 1)}
        d = self._assemble(alg, cutoff, [((a, a), self.D[a]) for a in range(1, m + 1)])
        e = self._assemble(alg, cutoff, [((a, a), eye[a]) for a in eye]
                           + [((a, b), blk) for (a, b), blk in self.E.items()])
        f = self._assemble(alg, cutoff, [((a, a), eye[a]) for a in eye]
                           + [((b, a), blk) for (a, b), blk in self.F.items()])
        return f, d, e

    def product(self) -> SeriesMatrix:
        f, d, e = self.matrices()
        return f * (d * e)


def gauss_factorize(t: SeriesMatrix, nu: Sequence[int]) -> GaussFactors:
    """Unique block ``F D E`` factorization by recursive block elimination.

    With ``T = [[A, B], [C, Z]]`` split after the first block: ``D_1 = A``,
    the first block row of E is ``A^{-1} B``, the first block column of F is
    ``C A^{-1}``, and the remaining blocks come from factorizing the
    quasi-determinant ``Z - C A^{-1} B``.
    """
    n, n2 = t.shape
    if n != n2:
        raise ValueError("gauss_factorize needs a square matrix")
    nu = check_composition(nu, n)
    alg = t.alg
    out = GaussFactors(nu, {}, {})
    current = t
    offset = 0
    for a in range(1, len(nu) + 1):
        p = nu[a - 1]
        rest = current.shape[0] - p
        blk = current.block(0, p, 0, p)
        inv = matrix_invert(blk)
        out.D[a] = blk
        out.Dt[a] = -inv
        if rest == 0:
            break
        b_blk = current.block(0, p, p, p + rest)
        c_blk = current.block(p, p + rest, 0, p)
        z_blk = current.block(p, p + rest, p, p + rest)
        e_row = inv * b_blk
        f_col = c_blk * inv
        col = 0
        for b in range(a + 1, len(nu) + 1):
            q = nu[b - 1]
            out.E[(a, b)] = e_row.block(0, p, col, col + q)
            out.F[(a, b)] = f_col.block(col, col + q, 0, p)
            col += q
        current = z_blk - c_blk * e_row
        offset += p
    return out


# -- Yang's R-matrix -----------------------------------------------------------

def yang_r_matrix(n: int, u) -> List[List]:
    """``R(u) = u - P`` on ``C^n (x) C^n`` (basis index ``n*a + b``)."""
    if n < 1:
        raise ValueError("n must be positive")
    u = rational(u)
    size = n * n
    mat = [[gmpy2.mpq(0)] * size for _ in range(size)]
    for a in range(n):
        for b in range(n):
            row = n * a + b
            mat[row][row] += u
            # P (e_a (x) e_b) = e_b (x) e_a
            mat[n * b + a][row] -= 1
    return mat


def _kron_embed(mat: List[List], n: int, slots: Tuple[int, int]) -> List[List]:
    """Embed a two-factor operator into three tensor factors at ``slots``."""
    size = n ** 3
    out = [[gmpy2.mpq(0)] * size for _ in range(size)]
    other = ({0, 1, 2} - set(slots)).pop()
    s0, s1 = slots
    for col in range(size):
        idx = (col // (n * n), (col // n) % n, col % n)
        src = n * idx[s0] + idx[s1]
        for dst in range(n * n):
            v = mat[dst][src]
            if not v:
                continue
            new = list(idx)
            new[s0], new[s1] = dst // n, dst % n
            out[new[0] * n * n + new[1] * n + new[2]][col] += v
    return out


def _matmul(a: List[List], b: List[List]) -> List[List]:
    size = len(a)
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col) if x and y), gmpy2.mpq(0)) for col in cols]
            for row in a]


def qybe_residual(n: int, u, v) -> List[List]:
    """``R12(u-v) R13(u) R23(v) - R23(v) R13(u) R12(u-v)`` as an exact matrix."""
    u, v = rational(u), rational(v)
    r12 = _kron_embed(yang_r_matrix(n, u - v), n, (0, 1))
    r13 = _kron_embed(yang_r_matrix(n, u), n, (0, 2))
    r23 = _kron_embed(yang_r_matrix(n, v), n, (1, 2))
    lhs = _matmul(_matmul(r12, r13), r23)
    rhs = _matmul(_matmul(r23, r13), r12)
    return [[x - y for x, y in zip(r, s)] for r, s in zip(lhs, rhs)]
