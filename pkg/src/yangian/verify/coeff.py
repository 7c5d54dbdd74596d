"""Coefficient extraction for identities between series in several variables.

An expression is built from one-variable series (``S(f, "u")``), sums,
noncommutative products and multiplication by a power of one variable.  Its
``u^{-r} v^{-s}`` coefficient is computed exactly by splitting indices over
the factors of each product.  Multiplication by ``u`` (``shift``) may appear
only outside of products, which is all that identities of the form
``(u - v) X = Y`` need.
"""

from __future__ import annotations

import itertools
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from ..algebra import Algebra, Element
from ..series import Series

Index = Dict[str, int]


class Expr:
    vars: FrozenSet[str]
    alg: Algebra
    depth: int = 0  # how far the expression reads past a coefficient index

    def __init__(self):
        self._memo: Dict[tuple, Element] = {}

    def coeff(self, idx: Index) -> Element:
        for v, k in idx.items():
            if v not in self.vars and k != 0:
                return self.alg.zero()
        key = tuple(sorted((v, idx.get(v, 0)) for v in self.vars))
        out = self._memo.get(key)
        if out is None:
            out = self._memo[key] = self._coeff(dict(key))
        return out

    def _coeff(self, idx: Index) -> Element:
        raise NotImplementedError

    def __add__(self, other: "Expr") -> "Expr":
        return Add([(1, self), (1, other)])

    def __sub__(self, other: "Expr") -> "Expr":
        return Add([(1, self), (-1, other)])

    def __neg__(self) -> "Expr":
        return Add([(-1, self)])

    def __mul__(self, other: "Expr") -> "Expr":
        return Mul(self, other)

    def __rmul__(self, c) -> "Expr":
        return Add([(c, self)])


class S(Expr):
    """A series in one variable."""

    def __init__(self, series: Series, var: str):
        super().__init__()
        self.series = series
        self.var = var
        self.vars = frozenset([var])
        self.alg = series.alg

    def _coeff(self, idx: Index) -> Element:
        return self.series[idx[self.var]]


class Fn(Expr):
    """Coefficients given by a function of the index tuple (in ``vars`` order)."""

    def __init__(self, alg: Algebra, vars: Sequence[str], fn: Callable[..., Element]):
        super().__init__()
        self.order = tuple(vars)
        self.vars = frozenset(vars)
        self.alg = alg
        self.fn = fn

    def _coeff(self, idx: Index) -> Element:
        ks = [idx[v] for v in self.order]
        if min(ks) < 0:
            return self.alg.zero()
        return self.fn(*ks)


class Const(Expr):
    def __init__(self, alg: Algebra, value):
        super().__init__()
        self.alg = alg
        self.vars = frozenset()
        self.value = value

    def _coeff(self, idx: Index) -> Element:
        return self.alg.scalar(self.value)


class Add(Expr):
    def __init__(self, terms: List[Tuple[object, Expr]]):
        super().__init__()
        flat: List[Tuple[object, Expr]] = []
        for c, e in terms:
            if isinstance(e, Add):
                flat.extend((c * c2, e2) for c2, e2 in e.terms)
            else:
                flat.append((c, e))
        self.terms = flat
        self.alg = flat[0][1].alg
        self.vars = frozenset().union(*(e.vars for _, e in flat))
        self.depth = max(e.depth for _, e in flat)

    def _coeff(self, idx: Index) -> Element:
        out = self.alg.zero()
        for c, e in self.terms:
            x = e.coeff(idx)
            if x.terms:
                out = out + (x if c == 1 else x.scale(c))
        return out


class Mul(Expr):
    def __init__(self, a: Expr, b: Expr):
        super().__init__()
        if a.depth or b.depth:
            raise ValueError("variable shifts may not appear inside products")
        self.a, self.b = a, b
        self.alg = a.alg
        self.vars = a.vars | b.vars

    def _coeff(self, idx: Index) -> Element:
        if any(k < 0 for k in idx.values()):
            return self.alg.zero()
        shared = sorted(self.a.vars & self.b.vars)
        out = self.alg.zero()
        ranges = [range(idx[v] + 1) for v in shared]
        for split in itertools.product(*ranges):
            ia = {v: idx[v] for v in self.a.vars}
            ib = {v: idx[v] for v in self.b.vars}
            for v, k in zip(shared, split):
                ia[v] = k
                ib[v] = idx[v] - k
            x = self.a.coeff(ia)
            if not x.terms:
                continue
            y = self.b.coeff(ib)
            if y.terms:
                out = out + x * y
        return out


class Shift(Expr):
    """``var^power * X``: the ``var^{-r}`` coefficient is ``X``'s at ``r + power``."""

    def __init__(self, var: str, power: int, x: Expr):
        super().__init__()
        self.var, self.power, self.x = var, power, x
        self.alg = x.alg
        self.vars = x.vars | {var}
        self.depth = x.depth + power

    def _coeff(self, idx: Index) -> Element:
        idx = dict(idx)
        idx[self.var] = idx.get(self.var, 0) + self.power
        return self.x.coeff(idx)


def comm(a: Expr, b: Expr) -> Expr:
    return a * b - b * a


def times_diff(x: Expr, u: str = "u", v: str = "v") -> Expr:
    """``(u - v) X``."""
    return Shift(u, 1, x) - Shift(v, 1, x)


def box(vars: Sequence[str], bound: int, low: int = 0) -> Iterator[Index]:
    """Index dicts with entries in ``low..bound`` summing to at most ``bound``."""
    vars = tuple(vars)
    for ks in itertools.product(range(low, bound + 1), repeat=len(vars)):
        if sum(ks) <= bound:
            yield dict(zip(vars, ks))


def identity_residuals(lhs: Expr, rhs: Expr, vars: Sequence[str], bound: int
                       ) -> Iterator[Tuple[str, Element]]:
    """Yield ``(label, lhs - rhs)`` for every coefficient in the box, including
    the positive powers produced by shifts."""
    low = -max(lhs.depth, rhs.depth)
    for idx in box(vars, bound, low):
        diff = lhs.coeff(idx) - rhs.coeff(idx)
        label = " ".join(f"{v}^{-k}" for v, k in idx.items())
        yield label, diff


def first_failure(lhs: Expr, rhs: Expr, vars: Sequence[str], bound: int
                  ) -> Optional[Tuple[str, Element]]:
    for label, diff in identity_residuals(lhs, rhs, vars, bound):
        if diff.terms:
            return label, diff
    return None
