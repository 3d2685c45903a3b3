import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitquat.algebra import I, J, K, ONE, ZERO, SplitQuaternion
from splitquat.errors import (
    DegreeMismatch, LeadingCoefficientNotInvertible, NotARightZero, NotConjugationClosed,
)
from splitquat.polynomials import (
    RPoly, SPoly, conj_poly, eval_right, has_real_factor, monic_reduce, norm_poly,
    poly_arith, poly_roots, quotient_by_right_linear, real_quadratic_factor_pairings,
    real_quartic_roots, reparametrize, right_divide,
)

S = SplitQuaternion
WORKED = SPoly([S(2, 1, 1, 1), S(1, 0, 0, 1), ONE])
WORKED_ZERO = S(0, -1.5, 0.5, -1)

coord = st.floats(-5, 5, allow_nan=False)
sq = st.builds(S, coord, coord, coord, coord)
quadratic = st.builds(lambda a, b, c: SPoly([c, b, a]), sq, sq, sq)


def lin(h):
    return SPoly.linear_factor(h)


def roots_match(got, want, atol=1e-9):
    got = sorted(got, key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    want = sorted(want, key=lambda z: (round(z.real, 6), round(z.imag, 6)))
    return len(got) == len(want) and all(abs(g - w) <= atol for g, w in zip(got, want))


def test_products_with_central_indeterminate():
    assert (lin(I) * lin(J)).allclose(SPoly([K, -(I + J), ONE]))
    left = SPoly([S(1, -1.5, 0.5, 0), ONE])
    assert (left * lin(WORKED_ZERO)).allclose(WORKED)
    assert poly_arith(WORKED, SPoly([ZERO]), "add").allclose(WORKED)


def test_zero_divisors_drop_the_degree():
    P = SPoly([ONE, ONE + J]) * SPoly([ONE, ONE - J])
    assert P.degree == 1


def test_conjugation():
    assert conj_poly(WORKED).allclose(SPoly([S(2, -1, -1, -1), S(1, 0, 0, -1), ONE]))
    real = SPoly([S.real(2.0), S.real(-1.0), ONE])
    assert conj_poly(real).allclose(real)
    assert conj_poly(conj_poly(WORKED)).allclose(WORKED)


def test_norm_polynomial_examples():
    assert norm_poly(WORKED).allclose(RPoly([3, 2, 4, 2, 1]))
    assert norm_poly(lin(I) * lin(J)).allclose(RPoly([-1, 0, 0, 0, 1]))
    conic = SPoly([S(-0.25, 0, 0.25, 0), I, S(1, 0, 1, 0)])
    assert norm_poly(conic).is_zero()


def test_right_evaluation():
    h1, h2 = S(1, 2, 0, -1), S(0, 1, 3, 2)
    assert eval_right(SPoly([ZERO, h1]), h2).allclose(h1 * h2)
    assert eval_right(WORKED, WORKED_ZERO).is_zero()
    assert eval_right(SPoly([ONE, ZERO, ONE]), I).is_zero()


def test_right_division():
    assert quotient_by_right_linear(WORKED, WORKED_ZERO).allclose(SPoly([S(1, -1.5, 0.5, 0), ONE]))
    assert quotient_by_right_linear(lin(I) * lin(J), J).allclose(lin(I))
    assert quotient_by_right_linear(SPoly([-ONE, ZERO, ONE]), ONE).allclose(SPoly([ONE, ONE]))
    with pytest.raises(NotARightZero):
        quotient_by_right_linear(WORKED, I)


def test_right_divide_returns_value_as_remainder():
    Q, r = right_divide(WORKED, I)
    assert r.allclose(eval_right(WORKED, I))
    assert (Q * lin(I) + SPoly([r])).allclose(WORKED)


def test_reparametrize_examples():
    assert reparametrize(SPoly([ONE, 2 * ONE, ONE]), -1.0).allclose(SPoly([ZERO, ZERO, ONE]))
    P = SPoly([S(1, 2, 3, 4), S(3, 1, -1, 2), ONE])
    assert abs(reparametrize(P, -1.5)[1].h0) < 1e-12


def test_monic_reduce():
    unit, M = monic_reduce(SPoly([2 * ONE, 2 * ONE, 2 * ONE]))
    assert unit.allclose(2 * ONE) and M.allclose(SPoly([ONE, ONE, ONE]))
    a = ONE + I
    unit, M = monic_reduce(SPoly([ZERO, a * K, a]))
    assert M.allclose(SPoly([ZERO, K, ONE]))
    with pytest.raises(LeadingCoefficientNotInvertible):
        monic_reduce(SPoly([I, ZERO, ONE + J]))


def test_quartic_root_examples():
    s2 = math.sqrt(2)
    assert roots_match(real_quartic_roots(RPoly([3, 2, 4, 2, 1])),
                       [1j, -1j, -1 + 1j * s2, -1 - 1j * s2])
    assert roots_match(real_quartic_roots(RPoly([-1, 0, 0, 0, 1])), [1, -1, 1j, -1j])
    N = RPoly([5, -2, 1]) * RPoly([-1, 0, 1])
    assert roots_match(real_quartic_roots(N), [1 + 2j, 1 - 2j, 1, -1])
    with pytest.raises(DegreeMismatch):
        real_quartic_roots(RPoly([1, 0, 1]))


def test_real_roots_are_exactly_real():
    for z in real_quartic_roots(RPoly([-1, 0, 0, 0, 1])):
        assert z.imag == 0.0 or abs(z.real) < 1e-12


def test_repeated_roots():
    N = RPoly.from_roots([1, 1, 1, 1])
    assert roots_match(real_quartic_roots(N), [1, 1, 1, 1], 1e-8)
    N = RPoly.from_roots([1j, -1j, 1j, -1j])
    assert roots_match(real_quartic_roots(N), [1j, -1j, 1j, -1j], 1e-8)
    N = RPoly.from_roots([1, 1.001, -2, 3])
    assert roots_match(real_quartic_roots(N), [1, 1.001, -2, 3], 1e-8)


def test_roots_against_numpy():
    # independent route: companion-matrix eigenvalues
    rng = np.random.default_rng(3)
    for _ in range(300):
        c = rng.integers(-6, 7, size=5).astype(float)
        c[4] = rng.choice([-3.0, -1.0, 1.0, 2.0])
        ours = poly_roots(RPoly(c))
        ref = np.roots(c[::-1])
        for z in ref:
            assert min(abs(z - w) for w in ours) <= 1e-6 * (1 + abs(z))


def test_pairings():
    s2 = math.sqrt(2)
    pairs = real_quadratic_factor_pairings([1j, -1j, -1 + 1j * s2, -1 - 1j * s2])
    assert len(pairs) == 1
    got = {tuple(np.round(M.coeffs, 9)) for M in pairs[0]}
    assert got == {(1.0, 0.0, 1.0), (3.0, 2.0, 1.0)}
    pairs = real_quadratic_factor_pairings([1, -1, 1j, -1j])
    assert len(pairs) == 1
    got = {tuple(np.round(M.coeffs, 9)) for M in pairs[0]}
    assert got == {(-1.0, 0.0, 1.0), (1.0, 0.0, 1.0)}
    assert len(real_quadratic_factor_pairings([1, 2, 3, 4])) == 3
    with pytest.raises(NotConjugationClosed):
        real_quadratic_factor_pairings([1j, 1j, 1, 2])


def test_has_real_factor():
    assert has_real_factor(SPoly([-I, I - ONE, ONE])) == pytest.approx(1.0)  # (t+i)(t-1)
    assert has_real_factor(WORKED) is None


@settings(max_examples=200)
@given(quadratic, quadratic)
def test_norm_polynomial_is_multiplicative(P, Q):
    lhs = norm_poly(P * Q)
    rhs = norm_poly(P) * norm_poly(Q)
    scale = max(1.0, (P.scale() * Q.scale()) ** 2)
    assert lhs.allclose(rhs, 1e-9 * scale * 50)


@given(quadratic, sq)
def test_linear_right_factor_gives_zero(P, h):
    Q = P * lin(h)
    assert eval_right(Q, h).is_zero(10 * Q.scale() * max(1.0, h.scale()) ** 3)


@given(quadratic, st.floats(-3, 3))
def test_reparametrize_inverts(P, s):
    assert reparametrize(reparametrize(P, s), -s).allclose(P, 1e-9 * max(1.0, P.scale()) * 100)


@given(quadratic, st.floats(-3, 3))
def test_norm_commutes_with_reparametrization(P, s):
    lhs = norm_poly(reparametrize(P, s))
    rhs = reparametrize(norm_poly(P), s)
    assert lhs.allclose(rhs, 1e-9 * max(1.0, P.scale()) ** 2 * 1e3)


@settings(max_examples=200)
@given(st.lists(st.floats(-4, 4), min_size=4, max_size=4))
def test_quartic_re_expansion(c):
    N = RPoly(c + [1.0])
    back = RPoly.from_roots(real_quartic_roots(N))
    assert back.allclose(N, 1e-8 * max(1.0, N.scale()) * 10)


@given(st.builds(lambda b, c: SPoly([c, b, ONE]), sq, sq))
def test_pairings_multiply_to_norm(P):
    N = norm_poly(P)
    for M1, M2 in real_quadratic_factor_pairings(real_quartic_roots(N)):
        assert (M1 * M2).allclose(N, 1e-6 * max(1.0, N.scale()))
