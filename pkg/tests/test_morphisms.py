import random

import gmpy2
import pytest
from hypothesis import given
from hypothesis import strategies as st

from yangian.algebra import (
    ContextMismatch,
    Element,
    TensorEnveloping,
    TensorYangian,
    Yangian,
    parse_element,
)
from yangian.morphisms import (
    CutoffTooSmall,
    MorphismDescriptor,
    antipode,
    antipode_multiply,
    apply_omega,
    coproduct,
    coproduct_on_slot,
    counit,
    counit_on_slot,
    kappa_l,
    phi_shift,
    psi_embed,
    standard_embedding,
    tilde_matrix,
)

Y1 = Yangian(1)
Y2 = Yangian(2)
Y3 = Yangian(3)
q = gmpy2.mpq


def P(text, alg=Y2):
    return parse_element(text, alg)


def random_word(alg, rng, length, max_level=3):
    n = alg.n
    w = tuple((rng.randint(1, n), rng.randint(1, n), rng.randint(1, max_level)) for _ in range(length))
    return Element(alg, {w: q(rng.randint(1, 3))})


seeds = st.integers(0, 10_000)


# -- linear automorphisms ---------------------------------------------------------------

def test_sigma_and_tau_examples():
    sigma = MorphismDescriptor("sigma")
    tau = MorphismDescriptor("tau")
    assert sigma.apply(P("T[1,2;3]")) == P("-T[1,2;3]")
    assert sigma.apply(P("T[1,2;2]")) == P("T[1,2;2]")
    assert tau.apply(elem("T[1,2;1]*T[2,2;2]")) == P("T[2,2;2]*T[2,1;1]").normal_form()


def elem(text):
    # a single word, kept as written
    x = P(text)
    return Element(Y2, dict(x.terms))


def test_eta_and_mu_examples():
    eta = MorphismDescriptor("eta", c=q(1))
    # coefficient of u^{-2} in T(u + 1)
    assert eta.apply(P("T[1,2;2]")) == P("T[1,2;2] - T[1,2;1]")
    assert eta.apply(P("T[1,2;1]")) == P("T[1,2;1]")
    mu = MorphismDescriptor("mu", f=(q(1), q(2)))
    assert mu.apply(P("T[1,1;1]")) == P("T[1,1;1] + 2")
    assert mu.apply(P("T[1,2;1]")) == P("T[1,2;1]")
    with pytest.raises(ValueError):
        MorphismDescriptor("mu", f=(q(2),))


def test_descriptor_parse():
    d = MorphismDescriptor.parse("psi:m=1,method=via_quasidet,cutoff=4")
    assert (d.kind, d.m, d.method, d.cutoff) == ("psi", 1, "quasidet", 4)
    assert MorphismDescriptor.parse("eta:c=3/2").c == q(3, 2)
    assert MorphismDescriptor.parse("mu:f=1 -1/3").f == (q(1), q(-1, 3))
    assert MorphismDescriptor.parse("sigma").anti
    for bad in ("nope", "eta:c", "eta:z=1", "kappa:l=0"):
        with pytest.raises(ValueError):
            MorphismDescriptor.parse(bad)


# -- omega, tilde, antipode -------------------------------------------------------------

def test_omega_examples():
    for i in (1, 2):
        for j in (1, 2):
            assert apply_omega(2, Y2.T(i, j, 1)) == Y2.T(i, j, 1)
    assert apply_omega(2, Y2.one()) == Y2.one()
    # T(-u)^{-1} at u^{-2}: (T^(1))^2 - T^(2) entrywise
    want = P("-T[1,2;2] + T[1,1;1]*T[1,2;1] + T[1,2;1]*T[2,2;1]")
    assert apply_omega(2, P("T[1,2;2]")) == want


def test_tilde_matrix_low_terms():
    t = tilde_matrix(2, 3)
    for i in range(2):
        for j in range(2):
            assert t.rows[i][j][0] == (-Y2.one() if i == j else Y2.zero())
            assert t.rows[i][j][1] == Y2.T(i + 1, j + 1, 1)


@given(seeds)
def test_omega_is_an_involution(seed):
    rng = random.Random(seed)
    x = random_word(Y2, rng, rng.randint(0, 3)).normal_form()
    assert apply_omega(2, apply_omega(2, x)) == x


def test_antipode_examples():
    for i in (1, 2):
        for j in (1, 2):
            assert antipode(2, Y2.T(i, j, 1)) == -Y2.T(i, j, 1)
    assert antipode(2, Y2.one()) == Y2.one()


def test_cutoff_too_small():
    with pytest.raises(CutoffTooSmall):
        apply_omega(2, P("T[1,1;3]"), 2)
    with pytest.raises(CutoffTooSmall):
        psi_embed(1, P("T[1,1;3]"), 2)
    with pytest.raises(ContextMismatch):
        apply_omega(3, P("T[1,1;1]"))


@pytest.mark.parametrize("name", ["eta:c=3/2", "mu:f=1 2 -1/3", "sigma", "tau", "omega",
                                  "antipode", "coproduct", "kappa:l=2"])
@given(seed=seeds)
def test_maps_respect_products(name, seed):
    rng = random.Random(seed)
    desc = MorphismDescriptor.parse(name)
    x = random_word(Y2, rng, rng.randint(1, 2)).normal_form()
    y = random_word(Y2, rng, rng.randint(1, 2)).normal_form()
    fx, fy = desc.apply(x), desc.apply(y)
    want = fy * fx if desc.anti else fx * fy
    assert desc.apply(x * y) == want


# -- embeddings --------------------------------------------------------------------------

def test_phi_and_standard_embedding():
    assert phi_shift(1, P("T[1,1;2]", Y1)) == P("T[2,2;2]")
    x = phi_shift(1, P("T[1,2;1]*T[2,1;3]"))
    assert x == P("T[2,3;1]*T[3,2;3]", Y3)
    assert standard_embedding(P("T[1,2;2]"), 3) == P("T[1,2;2]", Y3)
    with pytest.raises(ValueError):
        standard_embedding(P("T[1,2;2]", Y3), 2)


def test_psi_examples():
    assert psi_embed(1, Y1.T(1, 1, 1)) == Y2.T(2, 2, 1)
    # both constructions agree
    for text in ("T[1,1;2]", "T[1,1;1]*T[1,1;2]"):
        x = P(text, Y1)
        assert psi_embed(1, x, 2, "omega") == psi_embed(1, x, 2, "quasidet")


# -- Hopf structure ---------------------------------------------------------------------

def test_coproduct_examples():
    ty = TensorYangian(2, 2)
    for i in (1, 2):
        for j in (1, 2):
            assert coproduct(Y2.T(i, j, 1)) == ty.gen(1, i, j, 1) + ty.gen(2, i, j, 1)
    assert coproduct(Y2.one()) == ty.one()
    want = ty.gen(1, 1, 2, 2) + ty.gen(2, 1, 2, 2) + sum(
        (ty.gen(1, 1, k, 1) * ty.gen(2, k, 2, 1) for k in (1, 2)), ty.zero())
    assert coproduct(Y2.T(1, 2, 2)) == want


def test_slot_helpers():
    x = coproduct(P("T[1,2;2]"))
    assert counit_on_slot(x, 1) == P("T[1,2;2]")
    assert counit_on_slot(x, 2) == P("T[1,2;2]")
    assert coproduct_on_slot(x, 1) == coproduct_on_slot(x, 2)
    assert antipode_multiply(x, 2, 2).is_zero()
    assert counit(P("T[1,1;1] + 3")) == 3
    with pytest.raises(ContextMismatch):
        counit_on_slot(P("T[1,1;1]"), 1)


# -- evaluation maps ---------------------------------------------------------------------

def test_kappa_examples():
    e1, e2 = TensorEnveloping(2, 1), TensorEnveloping(2, 2)
    assert kappa_l(2, 1, P("T[1,2;1]")) == e1.gen(1, 1, 2)
    assert kappa_l(2, 1, P("T[1,2;2]")).is_zero()
    assert kappa_l(2, 2, P("T[1,1;3]")).is_zero()
    want = sum((e2.gen(1, 1, k) * e2.gen(2, k, 1) for k in (1, 2)), e2.zero())
    assert kappa_l(2, 2, P("T[1,1;2]")) == want
    assert kappa_l(2, 2, P("T[1,1;1]")) == e2.gen(1, 1, 1) + e2.gen(2, 1, 1)
