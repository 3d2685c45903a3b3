import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpora import null_sq
from splitquat.algebra import I, J, K, ONE, ZERO, SplitQuaternion, bilinear_q, conj, mul
from splitquat.errors import DependentInput, VanishingNormPolynomial, WrongRuling, ZeroVector
from splitquat.nullquadric import (
    ProjectiveLine, ProjectivePoint, RulingClass, is_null_line, line_null_intersections,
    on_null_quadric, ruling_type, segment_null_intersections, solve_division_plane,
)
from splitquat.polynomials import SPoly, norm_poly

S = SplitQuaternion
R1_LEAD, R1_CONST = S(1, 0, 0, 1), S(1, 1, 1, 1)
coord = st.floats(-5, 5, allow_nan=False)
sq = st.builds(S, coord, coord, coord, coord)


def test_membership():
    assert on_null_quadric(ONE + J)
    assert not on_null_quadric(ONE + I)
    assert not on_null_quadric(S(2, 1, 1, 1))
    with pytest.raises(ZeroVector):
        on_null_quadric(ZERO)


def test_projective_point_equality():
    assert ProjectivePoint(S(1, 2, 3, 4)) == ProjectivePoint(S(-2, -4, -6, -8))
    assert ProjectivePoint(S(0, 0, 1, 0)) != ProjectivePoint(S(0, 0, 1, 1e-3))


def test_null_line_examples():
    assert is_null_line(R1_CONST, R1_LEAD)
    assert not is_null_line(I, ONE)
    assert is_null_line(I + K, ONE + J)
    with pytest.raises(DependentInput):
        is_null_line(ONE, 2 * ONE)


def test_ruling_examples():
    assert ruling_type(R1_CONST, R1_LEAD) is RulingClass.RightRuling
    assert ruling_type(conj(R1_CONST), conj(R1_LEAD)) is RulingClass.LeftRuling
    assert ruling_type(J, ONE) is RulingClass.NotNull
    with pytest.raises(DependentInput):
        ruling_type(J, 3 * J)


def test_plane_solver_examples():
    u, basis = solve_division_plane(-R1_CONST, R1_LEAD, "right")
    assert u.allclose(S(-1, -1, 0, 0))
    assert mul(R1_LEAD, u).allclose(-R1_CONST)
    h = ONE + J
    u, basis = solve_division_plane(h, h, "left")
    assert u.allclose(ONE)
    assert basis[0].allclose(conj(h)) and basis[1].allclose(mul(I, conj(h)))
    g = mul(S(1, 2, 0, 0), h)
    u, _ = solve_division_plane(g, h, "left")
    assert u.allclose(S(1, 2, 0, 0))


def test_plane_solver_rejects_bad_input():
    with pytest.raises(WrongRuling):
        solve_division_plane(ONE, ONE + I, "left")
    # g = h x has no solution when g is not a right multiple of h
    with pytest.raises(WrongRuling):
        solve_division_plane(ONE, ONE + J, "right")


def test_segment_examples():
    assert segment_null_intersections(SPoly([S(2, 1, 1, 1), ZERO, ONE])).count == 0
    assert segment_null_intersections(SPoly([-ONE, ZERO, ONE])).count == 2
    assert segment_null_intersections(SPoly([S(2, 1, 1, 1), R1_LEAD, ONE])).count == 0
    with pytest.raises(VanishingNormPolynomial):
        segment_null_intersections(SPoly([ONE + J, ZERO, ONE + J]))


def test_segment_counts_leading_point_when_degree_drops():
    # a null leading coefficient puts the point t = ∞ on the quadric
    P = SPoly([ONE, ZERO, ONE + J])
    res = segment_null_intersections(P)
    assert math.inf in res.parameters


def test_line_examples():
    assert line_null_intersections(ProjectiveLine(ProjectivePoint(ONE), ProjectivePoint(S(2, 1, 1, 1)))) == 2
    assert line_null_intersections((R1_LEAD, R1_CONST)) == math.inf
    assert line_null_intersections((ONE, I)) == 0
    assert line_null_intersections((ONE, I + K)) == 1
    with pytest.raises(DependentInput):
        ProjectiveLine(ProjectivePoint(ONE), ProjectivePoint(2 * ONE))


def test_spanned_by_needs_rank_two():
    assert line_null_intersections(ProjectiveLine.spanned_by([ONE, J, ONE + 2 * J])) == 2
    with pytest.raises(DependentInput):
        ProjectiveLine.spanned_by([ONE, I, J])


@settings(max_examples=300)
@given(sq, sq)
def test_null_line_iff_norm_polynomial_vanishes(r0, r1):
    try:
        verdict = is_null_line(r0, r1)
    except DependentInput:
        return
    N = norm_poly(SPoly([r0, r1]))
    assert verdict == N.is_zero() or all(abs(c) < 1e-6 for c in N.coeffs)


def _random_null_pair(rng):
    h = null_sq(rng)
    p = S(*rng.uniform(-3, 3, size=4))
    return h, p


def test_ruling_generation_and_swap():
    rng = np.random.default_rng(11)
    for _ in range(300):
        h, p = _random_null_pair(rng)
        ph, hp = mul(p, h), mul(h, p)
        if ph.scale() > 1e-3 and not ProjectivePoint(ph).same_point(ProjectivePoint(h), 1e-6):
            assert ruling_type(ph, h) is RulingClass.LeftRuling
            assert ruling_type(conj(ph), conj(h)) is RulingClass.RightRuling
        if hp.scale() > 1e-3 and not ProjectivePoint(hp).same_point(ProjectivePoint(h), 1e-6):
            assert ruling_type(hp, h) is RulingClass.RightRuling
            assert ruling_type(conj(hp), conj(h)) is RulingClass.LeftRuling


def test_plane_solver_grid():
    rng = np.random.default_rng(5)
    for _ in range(100):
        h, p = _random_null_pair(rng)
        g = mul(p, h)
        u, (b1, b2) = solve_division_plane(g, h, "left")
        for lam in (-2.0, 0.0, 1.5):
            for mu in (-1.0, 0.5, 3.0):
                x = u + b1 * lam + b2 * mu
                assert (mul(x, h) - g).is_zero(10 * max(1.0, x.scale() * h.scale()))
        g = mul(h, p)
        u, (b1, b2) = solve_division_plane(g, h, "right")
        for lam in (-2.0, 1.0):
            x = u + b1 * lam + b2 * (0.5 - lam)
            assert (mul(h, x) - g).is_zero(10 * max(1.0, x.scale() * h.scale()))


@given(sq, sq, st.floats(0.1, 10), st.floats(-10, -0.1))
def test_line_count_invariant_under_rescaling(p, q, s1, s2):
    try:
        n = line_null_intersections((p, q))
    except (DependentInput, ZeroVector):
        return
    pp, pq, qq = p.norm(), bilinear_q(p, q), q.norm()
    disc = pq * pq - pp * qq
    # near-tangent lines are decided by the tolerance; keep clear of them
    if abs(disc) < 1e-6 * max(1.0, p.scale() * q.scale()) ** 2:
        return
    assert line_null_intersections((p * s1, q * s2)) == n
