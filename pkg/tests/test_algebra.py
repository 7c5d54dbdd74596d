import itertools
from fractions import Fraction

import gmpy2
import pytest
from hypothesis import given
from hypothesis import strategies as st

from yangian.algebra import (
    MINUS_INFINITY,
    ContextMismatch,
    Element,
    IndexBoundError,
    ParseError,
    TermCapExceeded,
    TensorEnveloping,
    TensorYangian,
    Yangian,
    commutator,
    compare_generators,
    degree,
    elem_commutator,
    elem_mul,
    format_element,
    normal_form,
    parse_element,
    set_term_cap,
    straighten_pair,
)

from oracle import naive_normal_form

Y2 = Yangian(2)
Y3 = Yangian(3)


def P(text, alg=Y2):
    return parse_element(text, alg)


def gens(n, max_level):
    rng = range(1, n + 1)
    return [(i, j, r) for i in rng for j in rng for r in range(1, max_level + 1)]


def words(n, max_level=3, max_len=4):
    return st.lists(st.sampled_from(gens(n, max_level)), min_size=0, max_size=max_len)


def word_elem(alg, w, c=1):
    return Element(alg, {tuple(w): gmpy2.mpq(c)})


def as_fractions(x):
    return {w: Fraction(int(c.numerator), int(c.denominator)) for w, c in x.terms.items()}


# -- generator order and the straightening oracle ----------------------------------

def test_compare_generators_examples():
    assert compare_generators(Y2, (1, 2, 1), (2, 1, 1)) == -1
    assert compare_generators(Y2, (1, 1, 3), (1, 1, 3)) == 0
    e = TensorEnveloping(3, 2)
    assert compare_generators(e, (2, 1, 1), (1, 3, 3)) == 1


def test_straighten_pair_examples():
    assert straighten_pair(Y2, (2, 1, 1), (1, 2, 1)) == P("T[2,2;1] - T[1,1;1]")
    assert straighten_pair(Y2, (1, 1, 1), (1, 1, 2)).is_zero()
    e = TensorEnveloping(2, 2)
    assert straighten_pair(e, (1, 1, 2), (2, 2, 1)).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_level_one_brackets_are_gl_n(n):
    alg = Yangian(n)
    rng = range(1, n + 1)
    for i, j, h, k in itertools.product(rng, repeat=4):
        got = straighten_pair(alg, (i, j, 1), (h, k, 1))
        want = alg.zero()
        if h == j:
            want = want + alg.T(i, k, 1)
        if i == k:
            want = want - alg.T(h, j, 1)
        assert got == want


@given(st.sampled_from(gens(3, 3)), st.sampled_from(gens(3, 3)))
def test_oracle_antisymmetric(g, h):
    assert (straighten_pair(Y3, g, h) + straighten_pair(Y3, h, g)).normal_form().is_zero()


def test_enveloping_bracket():
    e = TensorEnveloping(2, 2)
    x = e.gen(1, 1, 2) * e.gen(1, 2, 1) - e.gen(1, 2, 1) * e.gen(1, 1, 2)
    assert x == e.gen(1, 1, 1) - e.gen(1, 2, 2)


def test_tensor_slots_commute():
    ty = TensorYangian(2, 2)
    a, b = ty.gen(2, 1, 2, 1), ty.gen(1, 2, 1, 3)
    assert a * b == b * a


# -- products -------------------------------------------------------------------------------

def test_elem_mul_examples():
    t12 = Y2.T(1, 2, 1)
    assert elem_mul(t12, Y2.one()) == t12
    x = elem_mul(P("2*T[1,1;1]"), P("3*T[2,2;1]"))
    assert x == P("6*T[1,1;1]*T[2,2;1]")
    y = elem_mul(P("T[1,2;1] + 1"), P("T[1,2;1] - 1"))
    assert y == P("T[1,2;1]*T[1,2;1] - 1")


def test_commutator_examples():
    x = P("T[1,2;1] + 3*T[2,1;2]")
    assert normal_form(Y2, elem_commutator(x, x)).is_zero()
    assert normal_form(Y2, elem_commutator(P("T[1,2;1]"), P("T[2,1;1]"))) == P("T[1,1;1] - T[2,2;1]")
    assert commutator(Y2.one(), x).is_zero()


def test_normal_form_examples():
    assert P("T[2,1;1]*T[1,2;1]").normal_form() == P("T[1,2;1]*T[2,1;1] + T[2,2;1] - T[1,1;1]")
    m = P("T[1,1;1]*T[1,2;3]*T[2,2;1]")
    assert m.normal_form() == m
    assert Y2.zero().normal_form().is_zero()


def test_normal_form_against_single_swap_oracle():
    # T[1,2;2] T[1,1;1]: one swap plus the (mr) bracket [T_12^(2), T_11^(1)]
    w = P("T[1,2;2]*T[1,1;1]")
    want = naive_normal_form(w.terms)
    assert as_fractions(w.normal_form()) == want
    assert w.normal_form() == P("T[1,1;1]*T[1,2;2] - T[1,2;2]")


@given(words(2, 3, 5))
def test_normal_form_matches_naive_rewriting(w):
    x = word_elem(Y2, w)
    assert as_fractions(x.normal_form()) == naive_normal_form(x.terms)


@given(words(3, 2, 4))
def test_normal_form_matches_naive_rewriting_n3(w):
    x = word_elem(Y3, w)
    assert as_fractions(x.normal_form()) == naive_normal_form(x.terms)


@given(words(3, 3, 4), words(3, 3, 3))
def test_normal_form_idempotent_and_sound(a, b):
    x, y = word_elem(Y3, a), word_elem(Y3, b, 2)
    nx = x.normal_form()
    assert nx.normal_form() == nx
    assert (x * y) == normal_form(Y3, elem_mul(nx, y.normal_form()))
    assert normal_form(Y3, elem_mul(x, y)) == x * y


@given(words(3, 3, 5))
def test_filtration_compatible(w):
    x = word_elem(Y3, w)
    nx = x.normal_form()
    for kind in ("canonical", "loop"):
        assert degree(kind, nx) <= degree(kind, x)


def test_degree_examples():
    x = P("T[1,2;3]*T[2,1;2]")
    assert degree("canonical", x) == 5
    assert degree("loop", x) == 3
    assert degree("canonical", Y2.one()) == 0
    assert degree("canonical", Y2.zero()) == MINUS_INFINITY
    assert degree("loop", TensorEnveloping(2, 2).gen(1, 1, 2)) == 0


# -- parsing and printing -----------------------------------------------------------------

def test_parse_examples():
    x = P("T[1,2;1]*T[2,1;1] - 1")
    assert len(x) == 2
    assert x.scalar_part() == -1
    assert P("3/2*T[1,1;2]").coefficient([(1, 1, 2)]) == gmpy2.mpq(3, 2)
    with pytest.raises(IndexBoundError):
        P("T[5,1;1]")
    with pytest.raises(ParseError):
        P("T[1,1;1] +")
    with pytest.raises(ParseError):
        P("")


@given(words(3, 3, 4), st.integers(-5, 5), st.integers(1, 4))
def test_format_parse_round_trip(w, num, den):
    if num == 0:
        num = 1
    x = word_elem(Y3, w, gmpy2.mpq(num, den)).normal_form() + Y3.T(1, 2, 1)
    assert parse_element(format_element(x), Y3) == x


def test_format_tensor_contexts_round_trip():
    ty = TensorYangian(2, 2)
    x = ty.gen(1, 1, 2, 1) * ty.gen(2, 2, 1, 2)
    assert parse_element(format_element(x), ty) == x
    e = TensorEnveloping(2, 3)
    y = e.gen(3, 1, 2) * e.gen(1, 2, 1) + e.one()
    assert parse_element(format_element(y), e) == y


# -- errors -----------------------------------------------------------------------------------

def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        Y2.T(1, 1, 1) + Y3.T(1, 1, 1)


def test_level_zero_is_delta():
    assert Y2.T(1, 1, 0) == Y2.one()
    assert Y2.T(1, 2, 0).is_zero()


def test_term_cap_is_a_hard_error():
    old = set_term_cap(5)
    try:
        x = P("T[2,2;3]*T[2,1;3]*T[1,2;3]*T[1,1;3]", Y2)
        with pytest.raises(TermCapExceeded):
            x.alg.clear_cache()
            x.normal_form()
    finally:
        set_term_cap(old)
        Y2.clear_cache()
    assert set_term_cap(old) == old
