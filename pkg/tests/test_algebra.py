import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitquat import tolerance as tol
from splitquat.algebra import (
    I, J, K, ONE, ZERO, SplitQuaternion, bilinear_q, conj, from_matrix, inverse, left_matrix,
    mul, norm, parts, right_matrix, span_rank, to_matrix,
)
from splitquat.errors import NotInvertible

S = SplitQuaternion
coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
sq = st.builds(S, coord, coord, coord, coord)


def close(h, g, scale=1.0, rtol=1e-9):
    return all(abs(x - y) <= rtol * max(1.0, scale) for x, y in zip(h.coords(), g.coords()))


def test_multiplication_table():
    assert mul(I, I) == -ONE
    assert mul(J, J) == ONE
    assert mul(K, K) == ONE
    assert mul(I, J) == K
    assert mul(J, I) == -K
    assert mul(J, K) == -I
    assert mul(K, I) == J
    assert mul(mul(I, J), K) == ONE


def test_norm_signature():
    assert S(1, 2, 3, 4).norm() == 1 + 4 - 9 - 16
    assert (ONE + J).norm() == 0.0


def test_inverse_of_null_element_fails():
    with pytest.raises(NotInvertible):
        inverse(ONE + J)


def test_inverse_example():
    h = S(2, 1, 1, 1)
    assert close(mul(h, inverse(h)), ONE)


def test_parts_and_positive_part():
    scalar, vec = parts(S(1, 2, 3, 4))
    assert scalar == 1 and vec == S(0, 2, 3, 4)
    h = S(1, 2, 3, 4)
    assert h.positive_part + h.negative_part == h
    assert h.positive_part == S(1, 2, 0, 0)


def test_string_form():
    assert str(S(1, -2, 0.5, 0)) == "1 - 2i + 0.5j + 0k"


@settings(max_examples=300)
@given(sq, sq)
def test_matches_matrix_representation(h, g):
    # independent route: 2x2 real matrices
    lhs = to_matrix(mul(h, g))
    rhs = to_matrix(h) @ to_matrix(g)
    assert np.allclose(lhs, rhs, atol=1e-9 * max(1.0, h.scale() * g.scale()))
    assert np.isclose(np.linalg.det(to_matrix(h)), h.norm(), atol=1e-9 * max(1.0, h.scale() ** 2))


@given(sq)
def test_matrix_round_trip(h):
    assert close(from_matrix(to_matrix(h)), h, h.scale())


@given(sq, sq)
def test_conjugation_reverses_products(h, g):
    assert close(conj(mul(h, g)), mul(conj(g), conj(h)), h.scale() * g.scale())


@given(sq, sq)
def test_norm_is_multiplicative(h, g):
    assert abs(norm(mul(h, g)) - norm(h) * norm(g)) <= 1e-9 * max(1.0, (h.scale() * g.scale()) ** 2)


@given(sq)
def test_inverse_both_sides(h):
    if tol.is_zero(h.norm(), h.scale() ** 2):
        with pytest.raises(NotInvertible):
            inverse(h)
        return
    hi = inverse(h)
    assert close(mul(h, hi), ONE, h.scale() * hi.scale())
    assert close(mul(hi, h), ONE, h.scale() * hi.scale())


@given(sq, sq)
def test_polarization(h, g):
    lhs = 2 * bilinear_q(h, g)
    rhs = norm(h + g) - norm(h) - norm(g)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, (h.scale() + g.scale()) ** 2)


@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(0, 6.3))
def test_null_elements_have_two_dimensional_annihilator(h0, h1, theta):
    r = np.hypot(h0, h1)
    if r < 1e-3:
        return
    h = S(h0, h1, r * np.cos(theta), r * np.sin(theta))
    assert abs(h.norm()) <= 1e-9 * r * r
    # x -> x h is right multiplication by h
    sv = np.linalg.svd(right_matrix(h), compute_uv=False)
    assert np.sum(sv > 1e-9 * sv[0]) == 2
    sv = np.linalg.svd(left_matrix(h), compute_uv=False)
    assert np.sum(sv > 1e-9 * sv[0]) == 2


def test_left_and_right_matrices_act_as_products():
    h, g = S(1, 2, -1, 3), S(0.5, -1, 2, 1)
    assert np.allclose(left_matrix(h) @ g.to_array(), mul(h, g).to_array())
    assert np.allclose(right_matrix(g) @ h.to_array(), mul(h, g).to_array())


def test_span_rank_ignores_scaling_and_zero():
    assert span_rank([ONE, ONE * 1e-6, ZERO]) == 1
    assert span_rank([ONE, I, ONE + I]) == 2
    assert span_rank([ONE, I, J]) == 3


def test_tolerance_context():
    assert tol.get_eps() == 1e-9
    with tol.tolerance(1e-3):
        assert tol.is_zero(1e-4)
    assert not tol.is_zero(1e-4)
