"""Suites for algebra maps: automorphisms, Hopf axioms, psi embeddings and
the evaluation oracle."""

from __future__ import annotations

import itertools
from typing import Iterator, List, Sequence, Tuple

from ..algebra import (
    Element,
    Yangian,
    elem_commutator,
    elem_mul,
    rational,
)
from ..generators import center_series
from ..morphisms import (
    MorphismDescriptor,
    antipode,
    apply_linear_auto,
    apply_omega,
    coproduct,
    coproduct_on_slot,
    counit,
    counit_on_slot,
    kappa_l,
    psi_embed,
    standard_embedding,
)
from ..series import Series, series_invert, series_shift
from .common import exact_rank, fmt, level_tuples, seeded, series_diff, total
from .core import Case, SuiteSpec, suite

WORD_SAMPLES = 4
CENT_LEVEL = 3
TRUNC_DEGREE = 3

ETA = MorphismDescriptor("eta", c=rational("3/2"))
ETA_INV = MorphismDescriptor("eta", c=rational("-3/2"))
MU = MorphismDescriptor("mu", f=(rational(1), rational(2), rational("-1/3")))
SIGMA = MorphismDescriptor("sigma")
TAU = MorphismDescriptor("tau")


def gname(i: int, j: int, r: int) -> str:
    return f"T[{i},{j};{r}]"


def all_gens(n: int, max_level: int) -> List[Tuple[int, int, int]]:
    rng = range(1, n + 1)
    return [(i, j, r) for r in range(1, max_level + 1) for i in rng for j in rng]


def random_words(spec: SuiteSpec, label: str, length: int, bound: int) -> List[Tuple[tuple, ...]]:
    """Seeded words of ``length`` generators with level sum at most ``bound``."""
    rng = seeded(spec.seed, label)
    gens = all_gens(spec.n, bound)
    out = []
    while len(out) < WORD_SAMPLES:
        word = tuple(rng.choice(gens) for _ in range(length))
        if sum(g[2] for g in word) <= bound:
            out.append(word)
    return out


def word_element(alg, word) -> Element:
    return Element(alg, {tuple(word): rational(1)})


def word_text(word) -> str:
    return "".join(gname(*g) for g in word)


# -- automorphisms -------------------------------------------------------------------

@suite("automorphisms", "involutions, homomorphism property, S = omega.sigma and S^2")
def automorphism_cases(spec: SuiteSpec) -> Iterator[Case]:
    n, cut = spec.n, spec.cutoff
    alg = Yangian(n)
    bound = spec.level_bound()
    maps = {
        "eta": lambda x: apply_linear_auto(ETA, x),
        "mu": lambda x: apply_linear_auto(MU, x),
        "sigma": lambda x: apply_linear_auto(SIGMA, x),
        "tau": lambda x: apply_linear_auto(TAU, x),
        "omega": lambda x: apply_omega(n, x, cut),
        "antipode": lambda x: antipode(n, x, cut),
    }
    anti = {"sigma", "tau", "antipode"}

    for i, j, r in all_gens(n, cut):
        t = alg.T(i, j, r)
        g = gname(i, j, r)
        for name in ("sigma", "tau", "omega"):
            yield Case(f"{name}2:{g}", f"{name} is an involution",
                       lambda t=t, f=maps[name]: f(f(t)) - t)
        yield Case(f"eta-inv:{g}", "eta_c eta_-c = id",
                   lambda t=t: apply_linear_auto(ETA, apply_linear_auto(ETA_INV, t)) - t)
        yield Case(f"S=omega.sigma:{g}", "S = omega . sigma",
                   lambda t=t: maps["antipode"](t) - maps["omega"](maps["sigma"](t)))

    for name, f in maps.items():
        for word in random_words(spec, f"hom-{name}", 2, bound):
            x, y = (alg.T(*g) for g in word)

            def check(x=x, y=y, f=f, name=name):
                prod = f(y) * f(x) if name in anti else f(x) * f(y)
                return f(x * y) - prod
            yield Case(f"hom:map={name},word={word_text(word)}",
                       f"{name} respects multiplication", check)

    for word in random_words(spec, "S-words", 2, bound):
        x = (alg.T(*word[0]) * alg.T(*word[1]))
        yield Case(f"S=omega.sigma:{word_text(word)}", "S = omega . sigma",
                   lambda x=x: maps["antipode"](x) - maps["omega"](maps["sigma"](x)))

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            yield Case(f"s2:{fmt(i=i, j=j)}", "Corollary s2", lambda i=i, j=j: _s2(n, i, j, cut))


def _s2(n: int, i: int, j: int, cut: int):
    alg = Yangian(n)
    lhs = Series(alg, [alg.T(i, j, 0)] + [antipode(n, antipode(n, alg.T(i, j, r), cut), cut)
                                          for r in range(1, cut + 1)])
    c = center_series(n, cut)
    rhs = (series_invert(series_shift(c, -n)) * series_shift(Series.t_entry(alg, i, j, cut), -n)
           * series_shift(c, -(n - 1)))
    return series_diff(lhs, rhs)


# -- Hopf structure --------------------------------------------------------------------

@suite("hopf", "coassociativity, counit and antipode axioms")
def hopf_cases(spec: SuiteSpec) -> Iterator[Case]:
    n, cut = spec.n, spec.cutoff
    alg = Yangian(n)
    bound = spec.level_bound()
    for i, j, r in all_gens(n, cut):
        t = alg.T(i, j, r)
        g = gname(i, j, r)
        yield Case(f"coassoc:{g}", "(Delta x id) Delta = (id x Delta) Delta",
                   lambda t=t: coproduct_on_slot(coproduct(t), 1) - coproduct_on_slot(coproduct(t), 2))
        yield Case(f"counit:{g}", "(eps x id) Delta = id = (id x eps) Delta",
                   lambda t=t: [counit_on_slot(coproduct(t), 1) - t, counit_on_slot(coproduct(t), 2) - t])
        yield Case(f"antipode:{g}", "m (S x id) Delta = eps = m (id x S) Delta",
                   lambda t=t: [antipode_left(t, n, cut) - counit(t), antipode_right(t, n, cut) - counit(t)])
    for word in random_words(spec, "delta-hom", 2, bound):
        x, y = (alg.T(*g) for g in word)
        yield Case(f"delta-hom:{word_text(word)}", "Delta respects multiplication",
                   lambda x=x, y=y: coproduct(x * y) - coproduct(x) * coproduct(y))


def _split(x: Element, n: int):
    y = Yangian(n)
    for w, c in x.terms.items():
        left = Element(y, {tuple(g[1:] for g in w if g[0] == 1): rational(1)})
        right = Element(y, {tuple(g[1:] for g in w if g[0] == 2): rational(1)})
        yield c, left, right


def antipode_left(x: Element, n: int, cut: int) -> Element:
    """``m (S x id) Delta(x)``."""
    return total(Yangian(n), [(antipode(n, a, cut) * b).scale(c) for c, a, b in _split(coproduct(x), n)])


def antipode_right(x: Element, n: int, cut: int) -> Element:
    """``m (id x S) Delta(x)``."""
    return total(Yangian(n), [(a * antipode(n, b, cut)).scale(c) for c, a, b in _split(coproduct(x), n)])


# -- psi embeddings ----------------------------------------------------------------------

@suite("psi", "psi_m: quasi-determinant form, centralizer property, composition, embeddings",
       max_n=4)
def psi_cases(spec: SuiteSpec) -> Iterator[Case]:
    """``n`` bounds the size ``m + k`` of the target Yangian."""
    cut = spec.cutoff
    top = spec.n
    for m in range(1, top):
        for k in range(1, top - m + 1):
            src = Yangian(k)
            for i, j, r in all_gens(k, cut):
                t = src.T(i, j, r)
                yield Case(f"qdet:{fmt(m=m, k=k)},{gname(i, j, r)}", "Lemma qdet = (pdidef)",
                           lambda t=t, m=m: psi_embed(m, t, cut, "omega") - psi_embed(m, t, cut, "quasidet"))
            lvl = min(CENT_LEVEL, cut)
            big = Yangian(m + k)
            for (a, b, r), (i, j, s) in itertools.product(all_gens(m, lvl), all_gens(k, lvl)):
                def cent(a=a, b=b, r=r, t=src.T(i, j, s), m=m, big=big):
                    x = big.T(a, b, r)
                    y = psi_embed(m, t, cut)
                    return x * y - y * x
                yield Case(f"cent:{fmt(m=m, k=k)},{gname(a, b, r)},{gname(i, j, s)}", "Lemma cent", cent)
            for m2 in range(1, top - m - k + 1):
                for i, j, r in all_gens(k, cut):
                    t = src.T(i, j, r)
                    yield Case(f"comp:{fmt(m=m, m2=m2, k=k)},{gname(i, j, r)}", "(comp)",
                               lambda t=t, m=m, m2=m2: psi_embed(m, psi_embed(m2, t, cut), cut)
                               - psi_embed(m + m2, t, cut))
            for k2 in range(k + 1, top - m + 1):
                for i, j, r in all_gens(k, cut):
                    t = src.T(i, j, r)
                    yield Case(f"unam:{fmt(m=m, k=k, k2=k2)},{gname(i, j, r)}", "(unam)",
                               lambda t=t, m=m, k2=k2: psi_embed(m, standard_embedding(t, k2), cut)
                               - standard_embedding(psi_embed(m, t, cut), m + k2))


# -- evaluation oracle --------------------------------------------------------------------

def free_mr_residual(n: int, i: int, j: int, h: int, k: int, r: int, s: int) -> Element:
    """``[T_ij^(r), T_hk^(s)]`` minus its RTT right-hand side, as free words."""
    alg = Yangian(n)
    T = alg.T
    out = elem_commutator(T(i, j, r), T(h, k, s))
    for t in range(min(r, s)):
        out = out - elem_mul(T(i, k, r + s - 1 - t), T(h, j, t)) + elem_mul(T(i, k, t), T(h, j, r + s - 1 - t))
    return out


def ordered_monomials(gens: Sequence[tuple], weight, bound: int) -> List[tuple]:
    """Nondecreasing words in sorted ``gens`` of total weight at most ``bound``."""
    gens = sorted(gens)
    out: List[tuple] = []

    def rec(start: int, prefix: tuple, left: int) -> None:
        out.append(prefix)
        for idx in range(start, len(gens)):
            w = weight(gens[idx])
            if w <= left:
                rec(idx, prefix + (gens[idx],), left - w)

    rec(0, (), bound)
    return out


@suite("kappa", "evaluation oracle kappa_l: relations, straightening, truncation")
def kappa_cases(spec: SuiteSpec) -> Iterator[Case]:
    n, cut = spec.n, spec.cutoff
    alg = Yangian(n)
    bound = spec.level_bound()
    rng = range(1, n + 1)
    for l in spec.levels:
        for r, s in level_tuples(2, bound):
            for i, j, h, k in itertools.product(rng, repeat=4):
                yield Case(f"mr:{fmt(l=l, i=i, j=j, h=h, k=k, r=r, s=s)}", "(mr) under kappa_l",
                           lambda i=i, j=j, h=h, k=k, r=r, s=s, l=l:
                           kappa_l(n, l, free_mr_residual(n, i, j, h, k, r, s)))
        for word in random_words(spec, f"kappa-nf-{l}", 3, bound):
            w = word_element(alg, word)
            yield Case(f"nf:l={l},{word_text(word)}", "kappa_l(nf(w)) = kappa_l(w)",
                       lambda w=w, l=l: kappa_l(n, l, w.normal_form()) - kappa_l(n, l, w))
        for i, j, r in all_gens(n, cut):
            if r > l:
                yield Case(f"trunccor:l={l},{gname(i, j, r)}", "Corollary trunccor",
                           lambda i=i, j=j, r=r, l=l: kappa_l(n, l, alg.T(i, j, r)))
        yield Case(f"truncthm:l={l},deg={TRUNC_DEGREE}", "Theorem truncthm",
                   lambda l=l: _truncthm(n, l, TRUNC_DEGREE))


def _truncthm(n: int, l: int, degree: int):
    alg = Yangian(n)
    words = ordered_monomials(all_gens(n, l), lambda g: g[2], degree)
    images = [kappa_l(n, l, word_element(alg, w)).terms for w in words]
    rank = exact_rank(images)
    if rank != len(words):
        return f"rank {rank} < {len(words)} monomials"
    return None
