"""Generating-function lemmas, checked coefficient by coefficient.

Each case compares both sides of one identity at every ``u^{-r} v^{-s}``
(and ``w^{-t}``) with ``r + s (+ t)`` at most the level bound, including
the positive powers created by ``(u - v)`` factors.
"""

from __future__ import annotations

from typing import Iterator

from ..algebra import Yangian
from ..generators import drinfeld_generators, parabolic_generators
from .coeff import Const, Expr, Fn, S, Shift, comm, first_failure, times_diff
from .common import fmt, nus, tag
from .core import Case, SuiteSpec, suite

UV = ("u", "v")
UVW = ("u", "v", "w")


def _check(spec: SuiteSpec, build, vars=UV):
    def run():
        lhs, rhs = build()
        return first_failure(lhs, rhs, vars, spec.level_bound(max(lhs.depth, rhs.depth)))
    return run


def _sum(terms) -> Expr:
    terms = list(terms)
    out = terms[0]
    for t in terms[1:]:
        out = out + t
    return out


def times_diff_sq(x: Expr) -> Expr:
    """``(u - v)^2 X``."""
    return Shift("u", 2, x) - 2 * Shift("u", 1, Shift("v", 1, x)) + Shift("v", 2, x)


@suite("drinfeld-lemmas", "two- and three-variable identities behind the Drinfeld relations")
def drinfeld_lemma_cases(spec: SuiteSpec) -> Iterator[Case]:
    n, cut = spec.n, spec.cutoff
    g = lambda: drinfeld_generators(n, cut)
    alg = Yangian(n)
    zero = Const(alg, 0)
    if n > 1:
        spec.level_bound(1)  # reject a bound the cutoff cannot serve before running anything

    for i in range(1, n):
        def s(fn, var, i=i):
            return S(fn(g()), var)
        E1 = lambda var, i=i: s(lambda x: x.E(i), var)
        F1 = lambda var, i=i: s(lambda x: x.F(i), var)
        D1 = lambda var, i=i: s(lambda x: x.D(i), var)
        Dt1 = lambda var, i=i: s(lambda x: x.Dt(i), var)
        D2 = lambda var, i=i: s(lambda x: x.D(i + 1), var)
        Dt2 = lambda var, i=i: s(lambda x: x.Dt(i + 1), var)

        def goody2_i(E1=E1, D1=D1):
            e_u, e_v, d_u = E1("u"), E1("v"), D1("u")
            return times_diff(comm(d_u, e_v)), d_u * (e_v - e_u)

        def goody2_ii(E1=E1, Dt2=Dt2):
            e_u, e_v, t_v = E1("u"), E1("v"), Dt2("v")
            return times_diff(comm(e_u, t_v)), (e_u - e_v) * t_v

        def goody2_iii(E1=E1, F1=F1, Dt1=Dt1, D2=D2):
            return (times_diff(comm(E1("u"), F1("v"))),
                    Dt1("v") * D2("v") - Dt1("u") * D2("u"))

        def goody2_iv(E1=E1):
            e_u, e_v = E1("u"), E1("v")
            return times_diff(comm(e_u, e_v)), (e_v - e_u) * (e_v - e_u)

        def newby(E1=E1, D2=D2):
            e_u, e_v, d_u = E1("u"), E1("v"), D2("u")
            return times_diff(comm(d_u, e_v)), -(d_u * (e_v - e_u))

        def todd(i=i):
            e = g().E(i)
            e_u, e_v = S(e, "u"), S(e, "v")
            grid = Fn(alg, UV, lambda r, s_: e[r + s_ - 1] if r >= 1 and s_ >= 1 else alg.zero())
            return e_v - e_u, times_diff(grid)

        for name, build in (("goody2.i", goody2_i), ("goody2.ii", goody2_ii),
                            ("goody2.iii", goody2_iii), ("goody2.iv", goody2_iv),
                            ("newby", newby), ("todd", todd)):
            ref = name.replace("goody2.", "goody2 ") if name.startswith("goody2") else f"({name})"
            yield Case(f"{name}:{fmt(i=i)}", ref, _check(spec, build))

    for i in range(1, n - 1):
        E1 = lambda var, i=i: S(g().E(i), var)
        E2 = lambda var, i=i: S(g().E(i + 1), var)
        E13 = lambda var, i=i: S(g().E(i, i + 2), var)
        F2 = lambda var, i=i: S(g().F(i + 1), var)

        def goody3_i(E1=E1, F2=F2):
            return comm(E1("u"), F2("v")), zero

        def goody3_ii(E1=E1, E2=E2, E13=E13):
            return (times_diff(comm(E1("u"), E2("v"))),
                    E1("u") * E2("v") - E1("v") * E2("v") - E13("u") + E13("v"))

        def goody3_iii(E1=E1, E2=E2, E13=E13):
            return comm(E13("u"), E2("v")), E2("v") * comm(E1("u"), E2("v"))

        def goody3_iv(E1=E1, E2=E2, E13=E13):
            return (comm(E1("u"), E13("v") - E1("v") * E2("v")),
                    -(comm(E1("u"), E2("v")) * E1("u")))

        def serre1_i(E1=E1, E2=E2):
            return comm(comm(E1("u"), E2("v")), E2("v")), zero

        def serre1_ii(E1=E1, E2=E2):
            return comm(E1("u"), comm(E1("u"), E2("v"))), zero

        def serre2_i(E1=E1, E2=E2):
            return (comm(comm(E1("u"), E2("v")), E2("w")) + comm(comm(E1("u"), E2("w")), E2("v")),
                    zero)

        def serre2_ii(E1=E1, E2=E2):
            return (comm(E1("u"), comm(E1("v"), E2("w"))) + comm(E1("v"), comm(E1("u"), E2("w"))),
                    zero)

        for name, build, vars in (("goody3.i", goody3_i, UV), ("goody3.ii", goody3_ii, UV),
                                  ("goody3.iii", goody3_iii, UV), ("goody3.iv", goody3_iv, UV),
                                  ("serre1.i", serre1_i, UV), ("serre1.ii", serre1_ii, UV),
                                  ("serre2.i", serre2_i, UVW), ("serre2.ii", serre2_ii, UVW)):
            yield Case(f"{name}:{fmt(i=i)}", name.replace(".", " "), _check(spec, build, vars))


@suite("parabolic-lemmas", "block versions of the generating-function identities")
def parabolic_lemma_cases(spec: SuiteSpec) -> Iterator[Case]:
    if spec.n > 1:
        spec.level_bound(2)
    for nu in nus(spec):
        yield from _parabolic_lemmas(spec, nu)


def _parabolic_lemmas(spec: SuiteSpec, nu) -> Iterator[Case]:
    n, cut = spec.n, spec.cutoff
    m = len(nu)
    alg = Yangian(n)
    zero = Const(alg, 0)
    g = lambda: parabolic_generators(n, nu, cut)
    w = lambda a: range(1, nu[a - 1] + 1)

    def D(a, i, j, var):
        return S(g().D(a, i, j), var)

    def Dt(a, i, j, var):
        return S(g().Dt(a, i, j), var)

    def E(a, i, j, var):
        return S(g().Ea(a, i, j), var)

    def F(a, i, j, var):
        return S(g().Fa(a, i, j), var)

    def E13(a, i, j, var):
        return S(g().E(a, a + 2, i, j), var)

    def case(name, build, vars=UV, **kw):
        return Case(f"{name}:{fmt(nu=tag(nu), **kw)}", name.replace(".", " "), _check(spec, build, vars))

    for a in range(1, m):
        b = a + 1
        for i in w(a):
            for j in w(a):
                for h in w(a):
                    for k in w(b):
                        def p_i(i=i, j=j, h=h, k=k, a=a):
                            lhs = times_diff(comm(D(a, i, j, "u"), E(a, h, k, "v")))
                            if h != j:
                                return lhs, zero
                            return lhs, _sum(D(a, i, p, "u") * (E(a, p, k, "v") - E(a, p, k, "u"))
                                             for p in w(a))
                        yield case("pgoody2.i", p_i, a=a, i=i, j=j, h=h, k=k)
        for i in w(a):
            for j in w(b):
                for h in w(b):
                    for k in w(b):
                        def p_ii(i=i, j=j, h=h, k=k, a=a, b=b):
                            lhs = times_diff(comm(E(a, i, j, "u"), Dt(b, h, k, "v")))
                            if h != j:
                                return lhs, zero
                            return lhs, _sum((E(a, i, q, "u") - E(a, i, q, "v")) * Dt(b, q, k, "v")
                                             for q in w(b))
                        yield case("pgoody2.ii", p_ii, a=a, i=i, j=j, h=h, k=k)
        for i in w(a):
            for j in w(b):
                for h in w(b):
                    for k in w(a):
                        def p_iii(i=i, j=j, h=h, k=k, a=a, b=b):
                            return (times_diff(comm(E(a, i, j, "u"), F(a, h, k, "v"))),
                                    Dt(a, i, k, "v") * D(b, h, j, "v") - Dt(a, i, k, "u") * D(b, h, j, "u"))
                        yield case("pgoody2.iii", p_iii, a=a, i=i, j=j, h=h, k=k)
        for i in w(a):
            for j in w(b):
                for h in w(a):
                    for k in w(b):
                        def p_iv(i=i, j=j, h=h, k=k, a=a):
                            return (times_diff(comm(E(a, i, j, "u"), E(a, h, k, "v"))),
                                    (E(a, i, k, "v") - E(a, i, k, "u")) * (E(a, h, j, "v") - E(a, h, j, "u")))

                        def p_iv2(i=i, j=j, h=h, k=k, a=a):
                            lhs = times_diff_sq(comm(E(a, i, j, "u"), E(a, h, k, "v")))
                            rhs = ((E(a, i, j, "v") - E(a, i, j, "u")) * (E(a, h, k, "u") - E(a, h, k, "v"))
                                   + times_diff(E(a, h, j, "v") * (E(a, i, k, "v") - E(a, i, k, "u")))
                                   + times_diff((E(a, i, k, "u") - E(a, i, k, "v")) * E(a, h, j, "u")))
                            return lhs, rhs
                        yield case("pgoody2.iv", p_iv, a=a, i=i, j=j, h=h, k=k)
                        yield case("pgoody2.iv2", p_iv2, a=a, i=i, j=j, h=h, k=k)

    for a in range(1, m - 1):
        b, c = a + 1, a + 2
        for i in w(a):
            for j in w(b):
                for h in w(c):
                    for k in w(b):
                        yield case("pgoody3.i", lambda i=i, j=j, h=h, k=k, a=a:
                                   (comm(E(a, i, j, "u"), F(a + 1, h, k, "v")), zero),
                                   a=a, i=i, j=j, h=h, k=k)
        for i in w(a):
            for j in w(b):
                for h in w(b):
                    for k in w(c):
                        def q_ii(i=i, j=j, h=h, k=k, a=a, b=b):
                            lhs = times_diff(comm(E(a, i, j, "u"), E(b, h, k, "v")))
                            if h != j:
                                return lhs, zero
                            rhs = (_sum(E(a, i, q, "u") * E(b, q, k, "v") - E(a, i, q, "v") * E(b, q, k, "v")
                                        for q in w(b))
                                   - E13(a, i, k, "u") + E13(a, i, k, "v"))
                            return lhs, rhs
                        yield case("pgoody3.ii", q_ii, a=a, i=i, j=j, h=h, k=k)
        for i in w(a):
            for j in w(c):
                for h in w(b):
                    for k in w(c):
                        for gg in w(b):
                            yield case("pgoody3.iii", lambda i=i, j=j, h=h, k=k, gg=gg, a=a, b=b:
                                       (comm(E13(a, i, j, "u"), E(b, h, k, "v")),
                                        E(b, h, j, "v") * comm(E(a, i, gg, "u"), E(b, gg, k, "v"))),
                                       a=a, i=i, j=j, h=h, k=k, g=gg)
        for i in w(a):
            for j in w(b):
                for h in w(a):
                    for k in w(c):
                        for gg in w(b):
                            def q_iv(i=i, j=j, h=h, k=k, gg=gg, a=a, b=b):
                                inner = E13(a, h, k, "v") - _sum(E(a, h, q, "v") * E(b, q, k, "v")
                                                                  for q in w(b))
                                return (comm(E(a, i, j, "u"), inner),
                                        -(comm(E(a, i, gg, "u"), E(b, gg, k, "v")) * E(a, h, j, "u")))
                            yield case("pgoody3.iv", q_iv, a=a, i=i, j=j, h=h, k=k, g=gg)
        quads = [(i, j, h, k) for i in w(a) for j in w(b) for h in w(b) for k in w(c)]
        for i, j, h, k in quads:
            for f in w(b):
                for gg in w(c):
                    yield case("pserre1.i", lambda i=i, j=j, h=h, k=k, f=f, gg=gg, a=a, b=b:
                               (comm(comm(E(a, i, j, "u"), E(b, h, k, "v")), E(b, f, gg, "v")), zero),
                               a=a, i=i, j=j, h=h, k=k, f=f, g=gg)
                    yield case("pserre2.i", lambda i=i, j=j, h=h, k=k, f=f, gg=gg, a=a, b=b:
                               (comm(comm(E(a, i, j, "u"), E(b, h, k, "v")), E(b, f, gg, "w"))
                                + comm(comm(E(a, i, j, "u"), E(b, h, k, "w")), E(b, f, gg, "v")), zero),
                               vars=UVW, a=a, i=i, j=j, h=h, k=k, f=f, g=gg)
        for i in w(a):
            for j in w(b):
                for h in w(a):
                    for k in w(b):
                        for f in w(b):
                            for gg in w(c):
                                yield case("pserre1.ii", lambda i=i, j=j, h=h, k=k, f=f, gg=gg, a=a, b=b:
                                           (comm(E(a, i, j, "u"), comm(E(a, h, k, "u"), E(b, f, gg, "v"))), zero),
                                           a=a, i=i, j=j, h=h, k=k, f=f, g=gg)
                                yield case("pserre2.ii", lambda i=i, j=j, h=h, k=k, f=f, gg=gg, a=a, b=b:
                                           (comm(E(a, i, j, "u"), comm(E(a, h, k, "v"), E(b, f, gg, "w")))
                                            + comm(E(a, i, j, "v"), comm(E(a, h, k, "u"), E(b, f, gg, "w"))), zero),
                                           vars=UVW, a=a, i=i, j=j, h=h, k=k, f=f, g=gg)
