"""Projective geometry of the null quadric ``N = {[h] : h h̄ = 0}``.

``N`` carries two families of lines.  Through a null point ``[h]`` the left
ruling is ``{[r] : r h̄ = 0}`` and the right ruling is ``{[r] : h̄ r = 0}``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from . import tolerance as tol
from .algebra import (
    I, SplitQuaternion, as_sq, bilinear_q, inverse, mul, span_basis, span_rank,
)
from .errors import DependentInput, VanishingNormPolynomial, WrongRuling, ZeroVector
from .polynomials import SPoly, norm_poly, poly_roots

__all__ = [
    "ProjectivePoint", "ProjectiveLine", "RulingClass", "SegmentIntersections",
    "on_null_quadric", "is_null_line", "ruling_type", "solve_division_plane",
    "segment_null_intersections", "line_null_intersections", "POINT_MERGE_RTOL",
]

# Curve points at distinct parameters are identified with this looser
# tolerance: they come out of root finding, not from exact input data.
POINT_MERGE_RTOL = 1e-6


def _unit(h: SplitQuaternion) -> SplitQuaternion:
    s = h.scale()
    if s == 0.0:
        raise ZeroVector("the zero vector does not represent a projective point")
    return h * (1.0 / s)


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    rep: SplitQuaternion

    def __post_init__(self):
        object.__setattr__(self, "rep", as_sq(self.rep))
        _unit(self.rep)

    def same_point(self, other: "ProjectivePoint", rtol: float | None = None) -> bool:
        a = _unit(self.rep).coords()
        b = _unit(as_sq(other.rep if isinstance(other, ProjectivePoint) else other)).coords()
        limit = tol.get_eps() if rtol is None else rtol
        return all(abs(a[m] * b[n] - a[n] * b[m]) <= limit
                   for m in range(4) for n in range(m + 1, 4))

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.same_point(other)

    __hash__ = None

    def on_null_quadric(self) -> bool:
        return on_null_quadric(self.rep)


@dataclass(frozen=True, eq=False)
class ProjectiveLine:
    p: ProjectivePoint
    q: ProjectivePoint

    def __post_init__(self):
        p = self.p if isinstance(self.p, ProjectivePoint) else ProjectivePoint(self.p)
        q = self.q if isinstance(self.q, ProjectivePoint) else ProjectivePoint(self.q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        if span_rank([p.rep, q.rep]) != 2:
            raise DependentInput("a line needs two distinct points")

    @classmethod
    def spanned_by(cls, vectors) -> "ProjectiveLine":
        """The line spanned by vectors whose real span is two-dimensional."""
        basis = span_basis([as_sq(v) for v in vectors])
        if len(basis) != 2:
            raise DependentInput(f"vectors span a space of dimension {len(basis)}, not 2")
        return cls(ProjectivePoint(basis[0]), ProjectivePoint(basis[1]))

    def orthonormal_basis(self) -> tuple[SplitQuaternion, SplitQuaternion]:
        b = span_basis([self.p.rep, self.q.rep])
        return b[0], b[1]


class RulingClass(enum.Enum):
    LeftRuling = "LeftRuling"
    RightRuling = "RightRuling"
    NotNull = "NotNull"
    NullButSinglePoint = "NullButSinglePoint"

    def swapped(self) -> "RulingClass":
        if self is RulingClass.LeftRuling:
            return RulingClass.RightRuling
        if self is RulingClass.RightRuling:
            return RulingClass.LeftRuling
        return self


class SegmentIntersections(NamedTuple):
    count: int
    parameters: tuple[float, ...]


def on_null_quadric(h) -> bool:
    u = _unit(as_sq(h))
    return tol.is_zero(u.norm())


def _independent_units(r0, r1) -> tuple[SplitQuaternion, SplitQuaternion]:
    r0, r1 = as_sq(r0), as_sq(r1)
    if r0.scale() == 0.0 or r1.scale() == 0.0 or span_rank([r0, r1]) != 2:
        raise DependentInput(f"{r0} and {r1} are linearly dependent")
    return _unit(r0), _unit(r1)


def is_null_line(r0, r1) -> bool:
    u0, u1 = _independent_units(r0, r1)
    return all(tol.is_zero(v) for v in (u0.norm(), bilinear_q(u0, u1), u1.norm()))


def ruling_type(r0, r1) -> RulingClass:
    """Which family of rulings the line ``[r0] ∨ [r1]`` belongs to, if any."""
    u0, u1 = _independent_units(r0, r1)
    if not all(tol.is_zero(v) for v in (u0.norm(), bilinear_q(u0, u1), u1.norm())):
        return RulingClass.NotNull
    right = max(mul(u1.conj(), u0).scale(), mul(u0.conj(), u1).scale())
    left = max(mul(u0, u1.conj()).scale(), mul(u1, u0.conj()).scale())
    eps = tol.get_eps()
    if right <= eps and left <= eps:
        return RulingClass.NullButSinglePoint
    if right <= eps:
        return RulingClass.RightRuling
    if left <= eps:
        return RulingClass.LeftRuling
    # a null line lies in exactly one family; borderline data picks the closer one
    return RulingClass.RightRuling if right < left else RulingClass.LeftRuling


def solve_division_plane(g, h, side: str):
    """Particular solution and direction basis of ``x h = g`` (left) or ``h x = g`` (right).

    ``h`` must be null.  The solution set is the affine plane
    ``u + λ b1 + μ b2``; ``WrongRuling`` is raised when ``g`` is not of the
    form ``x h`` (resp. ``h x``), detected by the residual of ``u``.
    """
    g, h = as_sq(g), as_sq(h)
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if not on_null_quadric(h):
        raise WrongRuling(f"{h} is invertible, the equation has the single solution")
    hp = h.positive_part
    gp = g.positive_part
    hb = h.conj()
    if side == "left":
        u = mul(gp, inverse(hp))
        basis = (hb, mul(I, hb))
        residual = mul(u, h) - g
    else:
        u = mul(inverse(hp), gp)
        basis = (hb, mul(hb, I))
        residual = mul(h, u) - g
    if not residual.is_zero(max(g.scale(), u.scale() * h.scale())):
        raise WrongRuling(f"{g} is not a {side} multiple of {h}")
    return u, basis


def segment_null_intersections(P: SPoly) -> SegmentIntersections:
    """Distinct points where the curve ``t -> [P(t)]``, ``t`` in ℝ ∪ {∞}, meets N."""
    N = norm_poly(P)
    if N.is_zero():
        raise VanishingNormPolynomial("the whole curve lies on the null quadric")
    params: list[float] = []
    if N.degree >= 1:
        for z in poly_roots(N):
            if z.imag == 0.0 and not any(abs(z.real - r) <= 1e-9 * (1 + abs(r)) for r in params):
                params.append(z.real)
    pts = [(r, P.at_real(r)) for r in params]
    if N.degree < 4:
        pts.append((math.inf, P.leading))
    kept: list[tuple[float, SplitQuaternion]] = []
    for r, v in pts:
        # a real root of P itself is no projective point; it is never merged
        if v.scale() > 0.0 and any(
            w.scale() > 0.0 and ProjectivePoint(v).same_point(ProjectivePoint(w), POINT_MERGE_RTOL)
            for _, w in kept
        ):
            continue
        kept.append((r, v))
    return SegmentIntersections(len(kept), tuple(r for r, _ in kept))


def line_null_intersections(L) -> float:
    """Number of points the line shares with N: 0, 1, 2 or ``math.inf``."""
    if not isinstance(L, ProjectiveLine):
        L = ProjectiveLine(*L)
    p, q = L.orthonormal_basis()
    pp, pq, qq = p.norm(), bilinear_q(p, q), q.norm()
    if all(tol.is_zero(v) for v in (pp, pq, qq)):
        return math.inf
    disc = pq * pq - pp * qq
    if tol.is_zero(disc):
        return 1
    return 2 if disc > 0 else 0
