"""Algebra maps on the Yangian: (anti)automorphisms, embeddings, Hopf structure,
and the evaluation homomorphisms into tensor powers of U(gl_n)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Dict, Optional, Tuple

import gmpy2

from .algebra import (
    TENSOR_YANGIAN,
    YANGIAN,
    Algebra,
    ContextMismatch,
    Element,
    TensorEnveloping,
    TensorYangian,
    Yangian,
    rational,
)
from .series import (
    Series,
    SeriesMatrix,
    matrix_invert,
    quasi_det_entry,
    series_reflect,
)

ALGEBRA_KINDS = {"eta", "mu", "phi", "psi", "omega", "coproduct", "kappa"}
ANTI_KINDS = {"sigma", "tau", "antipode"}
KINDS = ALGEBRA_KINDS | ANTI_KINDS | {"counit"}


class CutoffTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class MorphismDescriptor:
    """A named map with its parameters, e.g. ``psi:m=1,method=quasidet,cutoff=4``."""

    kind: str
    n: int = 0
    c: object = 0
    f: Tuple = ()
    m: int = 0
    l: int = 1
    cutoff: int = 0
    method: str = "omega"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown morphism kind {self.kind!r}")
        if self.kind == "mu" and (not self.f or rational(self.f[0]) != 1):
            raise ValueError("mu needs coefficients a_0 = 1, a_1, ...")
        if self.kind == "psi" and self.method not in ("omega", "quasidet"):
            raise ValueError(f"unknown psi method {self.method!r}")
        if self.kind in ("phi", "psi") and self.m < 0:
            raise ValueError("m must be non-negative")
        if self.kind == "kappa" and self.l < 1:
            raise ValueError("l must be positive")

    @property
    def anti(self) -> bool:
        return self.kind in ANTI_KINDS

    @classmethod
    def parse(cls, text: str) -> "MorphismDescriptor":
        kind, _, rest = text.partition(":")
        kind = kind.strip()
        params: dict = {}
        for item in filter(None, (p.strip() for p in rest.split(","))):
            key, eq, value = item.partition("=")
            if not eq:
                raise ValueError(f"bad parameter {item!r} in {text!r}")
            key = key.strip()
            value = value.strip()
            if key in ("n", "m", "l", "cutoff"):
                params[key] = int(value)
            elif key == "c":
                params[key] = rational(value)
            elif key == "f":
                params[key] = tuple(rational(v) for v in value.split())
            elif key == "method":
                params[key] = value.replace("via_", "")
            else:
                raise ValueError(f"unknown parameter {key!r}")
        return cls(kind, **params)

    def apply(self, x: Element) -> Element:
        k = self.kind
        n = self.n or x.alg.n
        cutoff = self.cutoff or None
        if k in ("eta", "mu", "sigma", "tau"):
            return apply_linear_auto(self, x)
        if k == "omega":
            return apply_omega(n, x, cutoff)
        if k == "phi":
            return phi_shift(self.m, x)
        if k == "psi":
            return psi_embed(self.m, x, cutoff, self.method)
        if k == "coproduct":
            return coproduct(x)
        if k == "counit":
            return x.alg.scalar(counit(x))
        if k == "antipode":
            return antipode(n, x, cutoff)
        return kappa_l(n, self.l, x)


# -- generic extension of generator images ---------------------------------------

def extend(x: Element, image: Callable[[tuple], Element], target: Algebra,
           anti: bool = False) -> Element:
    """Extend a map on generators multiplicatively (or anti-multiplicatively)."""
    out = target.zero()
    cache: Dict[tuple, Element] = {}
    for word, c in x.terms.items():
        acc = target.scalar(c)
        seq = reversed(word) if anti else word
        for g in seq:
            img = cache.get(g)
            if img is None:
                img = cache[g] = image(g)
            acc = acc * img
            if not acc.terms:
                break
        out = out + acc
    return out


def _require_yangian(x: Element) -> Algebra:
    if x.alg.kind != YANGIAN:
        raise ContextMismatch(f"expected a Yangian element, got {x.alg!r}")
    return x.alg


def apply_linear_auto(desc: MorphismDescriptor, x: Element) -> Element:
    """Translation, multiplication by a series, sign change or transposition."""
    alg = _require_yangian(x)
    kind = desc.kind
    if kind == "eta":
        c = rational(desc.c)

        def image(g):
            i, j, r = g
            return sum((alg.T(i, j, r - s).scale(comb(r - 1, s) * (-c) ** s) for s in range(r)),
                       alg.zero())
    elif kind == "mu":
        coeffs = [rational(a) for a in desc.f]

        def image(g):
            i, j, r = g
            acc = alg.zero()
            for s in range(r + 1):
                a = coeffs[s] if s < len(coeffs) else 0
                if a:
                    acc = acc + alg.T(i, j, r - s).scale(a)
            return acc
    elif kind == "sigma":
        def image(g):
            return alg.T(*g).scale((-1) ** g[2])
    elif kind == "tau":
        def image(g):
            return alg.T(g[1], g[0], g[2])
    else:
        raise ValueError(f"{kind!r} is not a linear automorphism")
    return extend(x, image, alg, anti=kind in ("sigma", "tau"))


# -- maps defined through inverse series ----------------------------------------------

@lru_cache(maxsize=None)
def tilde_matrix(n: int, cutoff: int) -> SeriesMatrix:
    """``~T(u) = -T(u)^{-1}`` in ``Yangian(n)``."""
    alg = Yangian(n)
    return -matrix_invert(SeriesMatrix.t_matrix(alg, cutoff))


@lru_cache(maxsize=None)
def _omega_matrix(n: int, cutoff: int) -> SeriesMatrix:
    """``T(-u)^{-1}``."""
    return (-tilde_matrix(n, cutoff)).map(series_reflect)


@lru_cache(maxsize=None)
def _inverse_matrix(n: int, cutoff: int) -> SeriesMatrix:
    return -tilde_matrix(n, cutoff)


def _max_level(x: Element) -> int:
    return max((g[-1] for w in x.terms for g in w), default=0)


def _check_cutoff(x: Element, cutoff: int) -> None:
    if _max_level(x) > cutoff:
        raise CutoffTooSmall(f"cutoff {cutoff} below generator level {_max_level(x)}")


def apply_omega(n: int, x: Element, cutoff: Optional[int] = None) -> Element:
    """The inversion automorphism ``T(u) -> T(-u)^{-1}``."""
    alg = _require_yangian(x)
    if alg.n != n:
        raise ContextMismatch(f"element of {alg!r} passed with n={n}")
    cutoff = _max_level(x) if cutoff is None else cutoff
    _check_cutoff(x, cutoff)
    mat = _omega_matrix(n, max(cutoff, 1))
    return extend(x, lambda g: mat.rows[g[0] - 1][g[1] - 1][g[2]], alg)


def antipode(n: int, x: Element, cutoff: Optional[int] = None) -> Element:
    """``S(T(u)) = T(u)^{-1}``, extended anti-multiplicatively."""
    alg = _require_yangian(x)
    cutoff = _max_level(x) if cutoff is None else cutoff
    _check_cutoff(x, cutoff)
    mat = _inverse_matrix(n, max(cutoff, 1))
    return extend(x, lambda g: mat.rows[g[0] - 1][g[1] - 1][g[2]], alg, anti=True)


def counit(x: Element):
    """Kills every generator; returns the scalar part."""
    return x.scalar_part()


# -- embeddings ------------------------------------------------------------------

def phi_shift(m: int, x: Element) -> Element:
    """``T_{i,j}^{(r)} in Y_n -> T_{m+i,m+j}^{(r)} in Y_{m+n}``."""
    alg = _require_yangian(x)
    target = Yangian(alg.n + m)
    terms = {tuple((i + m, j + m, r) for i, j, r in w): c for w, c in x.terms.items()}
    return Element(target, terms, x._normal)


def standard_embedding(x: Element, n: int) -> Element:
    """``Y_k -> Y_n`` keeping generator names."""
    alg = _require_yangian(x)
    if n < alg.n:
        raise ValueError("target must be at least as large")
    return Element(Yangian(n), dict(x.terms), x._normal)


@lru_cache(maxsize=None)
def _psi_images_quasidet(m: int, n: int, cutoff: int) -> Tuple[Tuple[Series, ...], ...]:
    t = SeriesMatrix.t_matrix(Yangian(m + n), cutoff)
    border = list(range(m))
    return tuple(tuple(quasi_det_entry(t, border, border, m + i, m + j) for j in range(n))
                 for i in range(n))


def psi_series(m: int, n: int, cutoff: int) -> Tuple[Tuple[Series, ...], ...]:
    """``psi_m(T_{i,j}(u))`` for all ``i, j`` (0-based tuple of tuples)."""
    return _psi_images_quasidet(m, n, cutoff)


def psi_embed(m: int, x: Element, cutoff: Optional[int] = None, method: str = "quasidet") -> Element:
    """``psi_m = omega_{m+n} . phi_m . omega_n``, or its quasi-determinant form."""
    alg = _require_yangian(x)
    n = alg.n
    cutoff = _max_level(x) if cutoff is None else cutoff
    _check_cutoff(x, cutoff)
    method = method.replace("via_", "")
    if method == "omega":
        return apply_omega(m + n, phi_shift(m, apply_omega(n, x, cutoff)), cutoff)
    if method == "quasidet":
        images = _psi_images_quasidet(m, n, max(cutoff, 1))
        return extend(x, lambda g: images[g[0] - 1][g[1] - 1][g[2]], Yangian(m + n))
    raise ValueError(f"unknown method {method!r}")


# -- Hopf structure ----------------------------------------------------------------

def _coproduct_gen_terms(n: int, i: int, j: int, r: int, left: int, right: int,
                         target: Algebra) -> Element:
    out = target.zero()
    for k in range(1, n + 1):
        for s in range(r + 1):
            a = target.gen(left, i, k, s)
            b = target.gen(right, k, j, r - s)
            if a.terms and b.terms:
                out = out + a * b
    return out


def coproduct(x: Element) -> Element:
    """``Delta(T(u)) = T^{[1,2]}(u) T^{[1,3]}(u)`` into ``TensorYangian(n, 2)``."""
    alg = _require_yangian(x)
    target = TensorYangian(alg.n, 2)
    return extend(x, lambda g: _coproduct_gen_terms(alg.n, g[0], g[1], g[2], 1, 2, target), target)


def coproduct_on_slot(x: Element, slot: int) -> Element:
    """Apply ``Delta`` to tensor factor ``slot`` of a tensor-Yangian element,
    producing an element with one more tensor factor."""
    alg = x.alg
    if alg.kind != TENSOR_YANGIAN:
        raise ContextMismatch("coproduct_on_slot needs a tensor Yangian element")
    if not 1 <= slot <= alg.slots:
        raise ValueError("slot out of range")
    target = TensorYangian(alg.n, alg.slots + 1)

    def image(g):
        s, i, j, r = g
        if s < slot:
            return target.gen(s, i, j, r)
        if s > slot:
            return target.gen(s + 1, i, j, r)
        return _coproduct_gen_terms(alg.n, i, j, r, slot, slot + 1, target)

    return extend(x, image, target)


def counit_on_slot(x: Element, slot: int) -> Element:
    """Apply ``epsilon`` to tensor factor ``slot``; result lives in one fewer
    factor (a plain Yangian when one factor remains)."""
    alg = x.alg
    if alg.kind != TENSOR_YANGIAN:
        raise ContextMismatch("counit_on_slot needs a tensor Yangian element")
    remaining = alg.slots - 1
    target = Yangian(alg.n) if remaining == 1 else TensorYangian(alg.n, remaining)
    out: dict = {}
    for w, c in x.terms.items():
        if any(g[0] == slot for g in w):
            continue
        new = []
        for s, i, j, r in w:
            s2 = s - 1 if s > slot else s
            new.append((i, j, r) if remaining == 1 else (s2, i, j, r))
        key = tuple(new)
        out[key] = out.get(key, 0) + c
    return target.normal_form(Element(target, {w: c for w, c in out.items() if c}))


def antipode_multiply(x: Element, n: int, cutoff: int) -> Element:
    """``m (S (x) id)`` applied to a two-slot tensor element."""
    alg = x.alg
    if alg.kind != TENSOR_YANGIAN or alg.slots != 2:
        raise ContextMismatch("antipode_multiply needs a two-slot element")
    y = Yangian(n)
    out = y.zero()
    for w, c in x.terms.items():
        left = Element(y, {tuple(g[1:] for g in w if g[0] == 1): gmpy2.mpq(1)})
        right = Element(y, {tuple(g[1:] for g in w if g[0] == 2): gmpy2.mpq(1)})
        out = out + (antipode(n, left, cutoff) * right).scale(c)
    return out


# -- evaluation homomorphisms ---------------------------------------------------------

@lru_cache(maxsize=None)
def _kappa_image(n: int, l: int, i: int, j: int, r: int) -> Element:
    target = TensorEnveloping(n, l)
    if r > l:
        return target.zero()
    out = target.zero()
    for slots in itertools.combinations(range(1, l + 1), r):
        for mids in itertools.product(range(1, n + 1), repeat=r - 1):
            path = (i,) + mids + (j,)
            word = Element(target, {tuple((s, path[q], path[q + 1]) for q, s in enumerate(slots)):
                                    gmpy2.mpq(1)})
            out = out + target.normal_form(word)
    return out


def kappa_l(n: int, l: int, x: Element) -> Element:
    """``(kappa_1 (x) ... (x) kappa_1) . Delta^{(l)}`` into ``U(gl_n)^{(x) l}``.

    Words of ``x`` are mapped as written, without normalizing ``x`` first, so
    the map gives an independent check of Yangian straightening.
    """
    alg = _require_yangian(x)
    if alg.n != n:
        raise ContextMismatch(f"element of {alg!r} passed with n={n}")
    target = TensorEnveloping(n, l)
    return extend(x, lambda g: _kappa_image(n, l, *g), target)
