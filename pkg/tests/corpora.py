"""Seeded random generators shared by the test modules."""
from __future__ import annotations

import math

import numpy as np

from splitquat.algebra import ONE, ZERO, SplitQuaternion, inverse, mul
from splitquat.factorization import coefficient_rank
from splitquat.polynomials import SPoly, has_real_factor, norm_poly

S = SplitQuaternion


def int_sq(rng, lo=-5, hi=5) -> SplitQuaternion:
    return S(*rng.integers(lo, hi + 1, size=4).astype(float))


def float_sq(rng, scale=5.0) -> SplitQuaternion:
    return S(*rng.uniform(-scale, scale, size=4))


def null_sq(rng, scale=3.0) -> SplitQuaternion:
    """A random nonzero element with ``h h̄ = 0``."""
    h0, h1 = rng.uniform(-scale, scale, size=2)
    r = math.hypot(h0, h1)
    while r < 0.1:
        h0, h1 = rng.uniform(-scale, scale, size=2)
        r = math.hypot(h0, h1)
    theta = rng.uniform(0, 2 * math.pi)
    return S(h0, h1, r * math.cos(theta), r * math.sin(theta))


def invertible_int_sq(rng, lo=-5, hi=5) -> SplitQuaternion:
    while True:
        a = int_sq(rng, lo, hi)
        if a.norm() != 0.0:
            return a


def round_trip_instance(rng):
    """``P = a (t - h1)(t - h2)`` with integer data and invertible ``a``."""
    a = invertible_int_sq(rng)
    h1, h2 = int_sq(rng), int_sq(rng)
    P = SPoly([a]) * SPoly.linear_factor(h1) * SPoly.linear_factor(h2)
    return P, (a, h1, h2)


def has_real_polynomial_factor(P: SPoly) -> bool:
    """A real root, or (for monic quadratics) all coefficients real."""
    return all(c.is_real() for c in P.coeffs) or has_real_factor(P) is not None


def mixed_monic_corpus(n: int, seed: int = 7):
    """Monic quadratics from four families, skipping real factors and null norms.

    Families cycle: random ``b, c``; ``b = 0``; dependent with vectorial
    ``b``; dependent with arbitrary ``b``.  Integer coordinates in [-3, 3].
    """
    rng = np.random.default_rng(seed)
    out = []
    k = 0
    while len(out) < n:
        fam = k % 4
        k += 1
        v = lambda: int_sq(rng, -3, 3)  # noqa: E731
        if fam == 0:
            b, c = v(), v()
        elif fam == 1:
            b, c = ZERO, v()
        else:
            b = S(0.0, *rng.integers(-3, 4, size=3).astype(float)) if fam == 2 else v()
            lam, mu = (float(x) for x in rng.integers(-4, 5, size=2))
            c = b * mu + lam
        P = SPoly([c, b, ONE])
        if norm_poly(P).is_zero() or has_real_polynomial_factor(P):
            continue
        out.append(P)
    return out


def dependent(P: SPoly) -> bool:
    return coefficient_rank([ONE, P[1], P[0]]) < 3


def rank3_instance(rng):
    """Invertible ``a`` with ``1, a⁻¹b, a⁻¹c`` independent."""
    while True:
        a = invertible_int_sq(rng)
        b, c = int_sq(rng), int_sq(rng)
        ai = inverse(a)
        if coefficient_rank([ONE, mul(ai, b), mul(ai, c)]) == 3:
            return SPoly([c, b, a])


def all_null_remainder_instance(rng):
    """``(t - x)(t - y)`` with ``x, y`` pure vectors of norm one.

    Its norm polynomial is ``(t² + 1)²`` so the remainders of the factor
    ``t² + 1`` are null lines.  ``(t - i)(t - j)`` is the integer member.
    """
    def unit_vector():
        while True:
            v = rng.normal(size=3)
            # x x̄ = x1² - x2² - x3² = 1 for a pure vector x
            n = v[0] ** 2 - v[1] ** 2 - v[2] ** 2
            if n > 0.05:
                return S(0.0, *(v / math.sqrt(n)))
    x, y = unit_vector(), unit_vector()
    return SPoly.linear_factor(x) * SPoly.linear_factor(y)
