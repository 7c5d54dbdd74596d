import random

import gmpy2
import pytest
from hypothesis import given
from hypothesis import strategies as st

from yangian.algebra import Yangian, parse_element
from yangian.series import (
    GaussFactors,
    NotInvertible,
    Series,
    SeriesMatrix,
    TruncationError,
    gauss_factorize,
    matrix_invert,
    quasi_det,
    qybe_residual,
    series_at,
    series_invert,
    series_mul,
    series_shift,
    yang_r_matrix,
)

Y2 = Yangian(2)
Y3 = Yangian(3)
q = gmpy2.mpq


def P(text, alg=Y2):
    return parse_element(text, alg)


def const(alg, c, cut):
    return Series.constant(alg, c, cut)


def random_series(alg, rng, cut, unit=True):
    gens = alg.generators(2)
    coeffs = [alg.one() if unit else alg.scalar(rng.randint(-2, 2))]
    for _ in range(cut):
        x = alg.zero()
        for _ in range(rng.randint(0, 2)):
            g = rng.choice(gens)
            x = x + alg.gen(*g).scale(rng.randint(-3, 3))
        coeffs.append(x)
    return Series(alg, coeffs)


seeds = st.integers(0, 10_000)


def test_mul_examples():
    a = P("T[1,1;1]")
    f = Series(Y2, [Y2.one(), a, Y2.zero()])
    g = Series(Y2, [Y2.one(), -a, Y2.zero()])
    prod = series_mul(f, g)
    assert prod.coeffs == [Y2.one(), Y2.zero(), -(a * a)]
    assert f * Series.one(Y2, 2) == f
    assert series_mul(Series.one(Y2, 3), Series.one(Y2, 5)).cutoff == 3


def test_invert_examples():
    a = P("T[1,1;1]")
    f = Series(Y2, [Y2.one(), -a, Y2.zero(), Y2.zero()])
    assert series_invert(f).coeffs == [Y2.one(), a, a * a, a * a * a]
    t11 = Series.t_entry(Y2, 1, 1, 3)
    inv = series_invert(t11)
    assert inv[2] == P("T[1,1;1]*T[1,1;1] - T[1,1;2]")
    assert series_invert(inv) == t11


def test_invert_requires_unit():
    with pytest.raises(NotInvertible):
        series_invert(Series(Y2, [P("T[1,1;1]"), Y2.one()]))


def test_shift_examples():
    u_inv = Series(Y2, [Y2.zero()] + [Y2.one() if k == 0 else Y2.zero() for k in range(4)])
    shifted = series_shift(u_inv, 1)
    assert shifted.coeffs == [Y2.zero()] + [Y2.one()] * 4
    assert series_shift(u_inv, 0) == u_inv


def test_cutoff_is_enforced():
    f = Series.t_entry(Y2, 1, 2, 2)
    assert f[-1].is_zero()
    with pytest.raises(TruncationError):
        f[3]


@given(seeds)
def test_mul_associative_and_distributive(seed):
    rng = random.Random(seed)
    f, g, h = (random_series(Y2, rng, 3) for _ in range(3))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(seeds)
def test_inverse_is_two_sided(seed):
    f = random_series(Y3, random.Random(seed), 3)
    inv = series_invert(f)
    one = Series.one(Y3, 3)
    assert f * inv == one
    assert inv * f == one


@given(seeds, st.fractions(-3, 3, max_denominator=4), st.fractions(-3, 3, max_denominator=4))
def test_shift_is_additive(seed, a, b):
    f = random_series(Y2, random.Random(seed), 4)
    a, b = q(a.numerator, a.denominator), q(b.numerator, b.denominator)
    assert series_shift(series_shift(f, a), b) == series_shift(f, a + b)


def test_series_at_reflects():
    f = Series.t_entry(Y2, 1, 2, 3)
    # f(-u) negates odd coefficients
    assert series_at(f, -1, 0).coeffs == [Y2.zero(), -Y2.T(1, 2, 1), Y2.T(1, 2, 2), -Y2.T(1, 2, 3)]
    assert series_at(series_at(f, -1, 2), -1, 2) == f


# -- matrices --------------------------------------------------------------------------------

def test_matrix_invert_examples():
    eye = SeriesMatrix.identity(Y2, 2, 3)
    assert matrix_invert(eye) == eye
    f = Series.t_entry(Y2, 1, 1, 3)
    assert matrix_invert(SeriesMatrix(Y2, [[f]])).rows[0][0] == series_invert(f)


def test_matrix_inverse_of_t():
    t = SeriesMatrix.t_matrix(Y3, 3)
    inv = matrix_invert(t)
    assert t * inv == SeriesMatrix.identity(Y3, 3, 3)
    assert inv * t == SeriesMatrix.identity(Y3, 3, 3)


def test_quasi_det_scalar_blocks():
    m = lambda c: SeriesMatrix(Y2, [[const(Y2, c, 2)]])
    out = quasi_det(m(2), m(1), m(1), m(3))
    assert out.rows[0][0] == const(Y2, q(5, 2), 2)
    zero = SeriesMatrix.zeros(Y2, 1, 1, 2)
    t = SeriesMatrix.t_matrix(Y2, 2)
    d = t.block(1, 2, 1, 2)
    assert quasi_det(t.block(0, 1, 0, 1), zero, t.block(1, 2, 0, 1), d) == d


def test_gauss_single_block_is_t():
    t = SeriesMatrix.t_matrix(Y3, 3)
    g = gauss_factorize(t, (3,))
    assert g.D[1] == t
    assert not g.E and not g.F


def test_gauss_n2_against_direct_formulas():
    # D1 = T11, E = T11^{-1} T12, F = T21 T11^{-1}, D2 = T22 - T21 T11^{-1} T12
    cut = 4
    t = lambda i, j: Series.t_entry(Y2, i, j, cut)
    inv11 = series_invert(t(1, 1))
    g = gauss_factorize(SeriesMatrix.t_matrix(Y2, cut), (1, 1))
    assert g.D[1].rows[0][0] == t(1, 1)
    assert g.E[(1, 2)].rows[0][0] == inv11 * t(1, 2)
    assert g.F[(1, 2)].rows[0][0] == t(2, 1) * inv11
    assert g.D[2].rows[0][0] == t(2, 2) - t(2, 1) * inv11 * t(1, 2)
    assert g.Dt[2].rows[0][0] == -series_invert(g.D[2].rows[0][0])


@pytest.mark.parametrize("n,nu,cut", [(2, (1, 1), 4), (3, (1, 1, 1), 3), (3, (2, 1), 3),
                                      (3, (1, 2), 3), (4, (2, 2), 2), (4, (1, 2, 1), 2)])
def test_gauss_round_trip_on_t(n, nu, cut):
    t = SeriesMatrix.t_matrix(Yangian(n), cut)
    g = gauss_factorize(t, nu)
    assert (g.product() - t).is_zero()


@given(seeds)
def test_gauss_refactors_its_product(seed):
    rng = random.Random(seed)
    cut = 2
    unit = lambda: random_series(Y2, rng, cut)
    off = lambda: Series(Y2, [Y2.zero()] + random_series(Y2, rng, cut).coeffs[1:])
    d = {1: SeriesMatrix(Y2, [[unit()]]), 2: SeriesMatrix(Y2, [[unit()]])}
    given_f = GaussFactors((1, 1), d, {}, {(1, 2): SeriesMatrix(Y2, [[off()]])},
                           {(1, 2): SeriesMatrix(Y2, [[off()]])})
    again = gauss_factorize(given_f.product(), (1, 1))
    assert again.D[1] == d[1] and again.D[2] == d[2]
    assert again.E == given_f.E and again.F == given_f.F


def test_bad_composition():
    t = SeriesMatrix.t_matrix(Y2, 2)
    with pytest.raises(ValueError):
        gauss_factorize(t, (1, 2))
    with pytest.raises(ValueError):
        gauss_factorize(t, (2, 0))


# -- R-matrix ------------------------------------------------------------------------------

def test_r_matrix_examples():
    assert yang_r_matrix(1, 5) == [[q(4)]]
    r0 = yang_r_matrix(2, 0)
    perm = [[q(0)] * 4 for _ in range(4)]
    for a in range(2):
        for b in range(2):
            perm[2 * b + a][2 * a + b] = q(1)
    assert r0 == [[-x for x in row] for row in perm]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_qybe(n):
    rng = random.Random(n)
    for _ in range(5):
        u = q(rng.randint(-20, 20), rng.randint(1, 9))
        v = q(rng.randint(-20, 20), rng.randint(1, 9))
        assert all(x == 0 for row in qybe_residual(n, u, v) for x in row)
