"""Factorization of quadratic split quaternion polynomials into linear factors.

Entry point is :func:`factorize`.  It routes a quadratic ``P = a t² + b t + c``
through three normalizations:

* a curve lying entirely on the null quadric (vanishing norm polynomial) is
  handled by :func:`factorize_null_norm`;
* a non-invertible leading coefficient is removed by the substitution
  ``t -> s + 1/t`` at a parameter ``s`` where the norm polynomial does not
  vanish;
* otherwise ``P = a M`` with ``M`` monic, and ``M`` is shifted so that its
  linear coefficient has zero scalar part before the case dispatch.

Every witness is mapped back through these steps so that its product
reproduces the original input.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from . import tolerance as tol
from .algebra import (
    I, ONE, ZERO, SplitQuaternion, as_sq, inverse, left_matrix, mul, right_matrix, span_rank,
)
from .errors import (
    DependentCoefficients, InternalInconsistency, MNotAFactor, NormPolyNotZero, NotARightZero,
    NotInvertible, NotQuadratic, SingularSystem, WrongRuling, ZeroLeadingCoefficient,
)
from .nullquadric import RulingClass, ruling_type, solve_division_plane
from .polynomials import (
    RPoly, SPoly, eval_right, norm_poly, quotient_by_right_linear, real_quadratic_factor_pairings,
    real_quartic_roots, reparametrize, right_divide,
)

__all__ = [
    "CaseLabel", "RemainderClass", "RemainderCandidate", "Witness", "FactorizationOutcome",
    "DependentDecomposition", "RealZeroSet", "factorize", "factor_monic_real",
    "factor_monic_b_real", "factor_monic_dependent", "factor_generic", "remainder_candidates",
    "factor_independent", "common_zero_on_null_remainder", "factorize_null_norm",
    "enumerate_factorizations", "has_independent_linear_remainder", "coefficient_rank",
    "NullRemainderConstruction", "null_remainder_construction",
]

# Agreement required between a least-squares decomposition and its input.
# Looser than the zero-test tolerance because the rank decision it follows
# uses a relative singular-value cut of 1e-8.
_DECOMPOSITION_RTOL = 1e-6


class CaseLabel(enum.Enum):
    RealPolynomial = "RealPolynomial"
    BRealCNonreal = "BRealCNonreal"
    DependentBNonreal = "DependentBNonreal"
    Independent = "Independent"
    NullNormDependent = "NullNormDependent"
    NullNormIndependent = "NullNormIndependent"
    NonInvertibleLeadReparametrized = "NonInvertibleLeadReparametrized"


class RemainderClass(enum.Enum):
    UniqueRoot = "UniqueRoot"
    NullLine = "NullLine"
    DependentCoefficients = "DependentCoefficients"
    Constant = "Constant"


@dataclass(frozen=True)
class RemainderCandidate:
    M: RPoly
    R: SPoly
    classification: RemainderClass
    ruling: RulingClass | None = None


@dataclass(frozen=True)
class Witness:
    """A factorization ``P = left · right`` into linear polynomials.

    When the factorization can be written as ``unit (t - h1)(t - h2)`` the
    three quaternions are filled in; otherwise they are ``None`` and only the
    general factors are meaningful.
    """

    left: SPoly
    right: SPoly
    unit: SplitQuaternion | None = None
    h1: SplitQuaternion | None = None
    h2: SplitQuaternion | None = None

    @classmethod
    def from_zeros(cls, unit, h1, h2) -> "Witness":
        unit, h1, h2 = as_sq(unit), as_sq(h1), as_sq(h2)
        return cls(SPoly([-mul(unit, h1), unit]), SPoly.linear_factor(h2), unit, h1, h2)

    @classmethod
    def from_factors(cls, left: SPoly, right: SPoly) -> "Witness":
        """Bring ``left · right`` into the form ``unit (t - h1)(t - h2)`` when possible."""
        lead = right[1]
        if not _well_invertible(lead):
            return cls(left, right)
        h2 = -mul(inverse(lead), right[0])
        left = left * SPoly([lead])
        unit = left[1]
        if _well_invertible(unit):
            h1 = -mul(inverse(unit), left[0])
        else:
            try:
                h1, _ = solve_division_plane(-left[0], unit, "right")
            except (WrongRuling, NotInvertible):
                return cls(left, SPoly.linear_factor(h2))
        return cls(left, SPoly.linear_factor(h2), unit, h1, h2)

    @property
    def canonical(self) -> bool:
        return self.unit is not None

    def expand(self) -> SPoly:
        if self.canonical:
            return SPoly([self.unit]) * SPoly.linear_factor(self.h1) * SPoly.linear_factor(self.h2)
        return self.left * self.right

    def residual(self, P: SPoly) -> float:
        diff = self.expand() - P
        return max(c.scale() for c in diff.coeffs)

    def shifted(self, s: float) -> "Witness":
        """Witness for ``P(t - s)`` given this witness for ``P(t)``."""
        left, right = reparametrize(self.left, -s), reparametrize(self.right, -s)
        if self.canonical:
            return Witness(left, right, self.unit, self.h1 + s, self.h2 + s)
        return Witness(left, right)

    def scaled(self, unit: SplitQuaternion) -> "Witness":
        """Witness for ``unit · P``."""
        left = SPoly([unit]) * self.left
        if self.canonical:
            return Witness(left, self.right, mul(unit, self.unit), self.h1, self.h2)
        return Witness.from_factors(left, self.right)


@dataclass(frozen=True)
class FactorizationOutcome:
    label: CaseLabel
    factorizable: bool
    witness: Witness | None = None
    certificate: dict[str, Any] = field(default_factory=dict)
    residual: float | None = None


@dataclass(frozen=True)
class DependentDecomposition:
    lambda_: float | None = None
    mu: float | None = None
    alpha: float | None = None
    beta: float | None = None
    m: float | None = None


@dataclass(frozen=True)
class RealZeroSet:
    """Zeros of ``t² + c0``: the quadric ``{x : Sc(x) = 0, x x̄ = c0}`` plus real zeros."""

    c0: float
    quadric: str
    sample_zeros: tuple[SplitQuaternion, ...]


# ----------------------------------------------------------------------------
# helpers


# Dividing by a leading coefficient this close to the null cone would blow
# the witness up, so such factors are kept in general linear form.
_CANONICAL_RTOL = 1e-6


def _well_invertible(h: SplitQuaternion) -> bool:
    return abs(h.norm()) > _CANONICAL_RTOL * h.scale() ** 2


def coefficient_rank(vectors) -> int:
    """Rank of the real span of ``vectors`` by the relative singular-value cut."""
    return span_rank([as_sq(v) for v in vectors], normalize=False)


def _lstsq(columns: list[SplitQuaternion], target: SplitQuaternion) -> tuple[np.ndarray, float]:
    A = np.array([c.coords() for c in columns]).T
    y = target.to_array()
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    return coef, float(np.max(np.abs(A @ coef - y)))


def _jacobian(P: SPoly, x: SplitQuaternion) -> np.ndarray:
    # derivative of a x² + b x + c in direction d is a(x d + d x) + b d
    a, b = P[2], P[1]
    return left_matrix(mul(a, x)) + left_matrix(a) @ right_matrix(x) + left_matrix(b)


_POLISH_RCOND = 1e-8


def _polish_zero(P: SPoly, x: SplitQuaternion, steps: int = 6) -> SplitQuaternion:
    """Gauss-Newton refinement of an approximate right zero of a quadratic."""
    best = x
    fbest = eval_right(P, best)
    err = fbest.scale()
    for _ in range(steps):
        if err == 0.0:
            break
        # directions with tiny singular values run along a family of zeros;
        # stepping there only trades a rounding-level residual for drift
        step, *_ = np.linalg.lstsq(_jacobian(P, best), -fbest.to_array(), rcond=_POLISH_RCOND)
        cand = best + SplitQuaternion.from_seq(step)
        fcand = eval_right(P, cand)
        if fcand.scale() >= err:
            break
        best, fbest, err = cand, fcand, fcand.scale()
    return best


def _refine(P: SPoly, w: Witness) -> Witness:
    """Polish the right zero of a witness whose right factor is monic."""
    if not (w.right[1] - ONE).is_zero():
        return w
    h2 = _polish_zero(P, -w.right[0])
    left, _ = right_divide(P, h2)
    cand = Witness.from_factors(left, SPoly.linear_factor(h2))
    return cand if cand.residual(P) < w.residual(P) else w


def _check_quadratic(P) -> SPoly:
    if not isinstance(P, SPoly):
        P = SPoly(P)
    if P.degree != 2:
        raise NotQuadratic(f"expected a polynomial of degree 2, got degree {P.degree}")
    return P


def _monic_witness(P: SPoly, h2: SplitQuaternion) -> Witness:
    # P monic: t² + b t + c = (t - h1)(t - h2) with h1 = -b - h2
    return Witness.from_zeros(ONE, -P[1] - h2, h2)


def _outcome(label, witness: Witness | None, P: SPoly, certificate: dict) -> FactorizationOutcome:
    if witness is None:
        return FactorizationOutcome(label, False, None, certificate, None)
    return FactorizationOutcome(label, True, witness, certificate, witness.residual(P))


# ----------------------------------------------------------------------------
# monic polynomials with dependent coefficients


def factor_monic_real(c0: float) -> RealZeroSet:
    c0 = float(c0)
    if tol.is_zero(c0):
        return RealZeroSet(c0, "cone", (ZERO, I + SplitQuaternion(0.0, 0.0, 1.0, 0.0)))
    if c0 > 0:
        return RealZeroSet(c0, "hyperboloid of two sheets", (I * math.sqrt(c0),))
    r = math.sqrt(-c0)
    return RealZeroSet(c0, "hyperboloid of one sheet",
                       (SplitQuaternion(0.0, 0.0, r, 0.0), SplitQuaternion.real(r),
                        SplitQuaternion.real(-r)))


def _b_real_quantities(c: SplitQuaternion) -> dict[str, float]:
    return {"c_norm": c.norm(), "vec_c_norm": c.vector.norm(), "c0": c.h0}


def factor_monic_b_real(c) -> FactorizationOutcome:
    """Decide and construct a zero of ``t² + c`` with ``c`` not real."""
    c = as_sq(c)
    P = SPoly([c, ZERO, ONE])
    q = _b_real_quantities(c)
    s2 = max(1.0, c.scale()) ** 2
    vec_pos = tol.is_positive(q["vec_c_norm"], s2)
    inside = not tol.is_negative(q["c_norm"], s2) and tol.is_negative(q["c0"], c.scale())
    cert: dict[str, Any] = dict(q)
    if not (vec_pos or inside):
        if tol.is_negative(q["c_norm"], s2):
            cert["violated"] = "c c̄ < 0"
        elif not tol.is_negative(q["vec_c_norm"], s2):
            cert["violated"] = "Vec(c) Vec(c)‾ = 0 and c0 >= 0"
        else:
            cert["violated"] = "Vec(c) Vec(c)‾ < 0, c c̄ >= 0 and c0 >= 0"
        return _outcome(CaseLabel.BRealCNonreal, None, P, cert)
    # the largest admissible x0, which keeps x_i = -c_i / (2 x0) small
    x0 = math.sqrt(max(0.0, (-c.h0 + math.sqrt(max(0.0, q["c_norm"]))) / 2.0))
    if x0 == 0.0:
        raise InternalInconsistency("admissible case produced x0 = 0")
    x = SplitQuaternion(x0, -c.h1 / (2 * x0), -c.h2 / (2 * x0), -c.h3 / (2 * x0))
    x = _polish_zero(P, x)
    cert["x0"] = x0
    return _outcome(CaseLabel.BRealCNonreal, _monic_witness(P, x), P, cert)


def factor_monic_dependent(b, lambda_: float, mu: float) -> FactorizationOutcome:
    """Decide and factor ``t² + b t + λ + μ b`` with ``Sc(b) = 0``, ``b`` not real."""
    b = as_sq(b)
    lam, mu = float(lambda_), float(mu)
    P = SPoly([b * mu + lam, b, ONE])
    nb = b.norm()
    s2 = max(1.0, b.scale(), abs(lam), abs(mu)) ** 2
    cert: dict[str, Any] = {
        "b_norm": nb, "lambda": lam, "mu": mu,
        "decomposition": DependentDecomposition(lambda_=lam, mu=mu),
    }
    label = CaseLabel.DependentBNonreal
    if tol.is_zero(lam + mu * mu, s2):
        cert["branch"] = "real linear factor"
        return _outcome(label, Witness.from_zeros(ONE, SplitQuaternion.real(-mu), b * (-1.0) + mu),
                        P, cert)
    if tol.is_positive(nb, s2):
        cert["branch"] = "b b̄ > 0"
        return _outcome(label, _first_generic(P, cert), P, cert)
    if tol.is_zero(nb, s2):
        cert["branch"] = "b b̄ = 0"
        if not tol.is_negative(lam, s2):
            cert["violated"] = "λ >= 0 and λ + μ² != 0"
            return _outcome(label, None, P, cert)
        r = math.sqrt(-lam)
        h1 = b * (-0.5 * (1 + mu / r)) + r
        h2 = b * (-0.5 * (1 - mu / r)) - r
        return _outcome(label, Witness.from_zeros(ONE, h1, h2), P, cert)
    cert["branch"] = "b b̄ < 0"
    s = math.sqrt(-nb)
    D = nb + 4 * lam
    cert["discriminant"] = D
    if tol.is_positive(D, s2) or tol.is_positive(D - 4 * mu * s, s2) \
            or tol.is_positive(4 * mu * s + D, s2):
        cert["violated"] = "b b̄ + 4λ <= 4μ√(-b b̄) <= -(b b̄ + 4λ) fails"
        return _outcome(label, None, P, cert)
    A = math.sqrt(max(0.0, -D - 4 * s * mu))
    B = math.sqrt(max(0.0, -D + 4 * s * mu))
    L1 = RPoly([(s + A) / 2, 1.0])
    L4 = RPoly([-(s - B) / 2, 1.0])
    M = L1 * L4
    cert["M"] = M
    zeros = factor_generic(P, M, check_factor=False)
    if zeros is not None:
        return _outcome(label, Witness.from_zeros(ONE, *zeros), P, cert)
    return _outcome(label, _first_generic(P, cert), P, cert)


def _first_generic(P: SPoly, cert: dict) -> Witness | None:
    for cand in remainder_candidates(P):
        if cand.classification is RemainderClass.UniqueRoot:
            zeros = factor_generic(P, cand.M, check_factor=False)
            if zeros is not None:
                cert.setdefault("M", cand.M)
                return Witness.from_zeros(ONE, *zeros)
    return None


# ----------------------------------------------------------------------------
# generic algorithm and remainder polynomials


def factor_generic(P: SPoly, M: RPoly, check_factor: bool = True):
    """Right zero from the remainder ``R = P - M``; returns ``(h1, h2)`` or ``None``."""
    P = _check_quadratic(P)
    if check_factor:
        N = norm_poly(P)
        _, rem = N.divmod(M)
        if not all(tol.is_zero(x, N.scale()) for x in rem.coeffs):
            raise MNotAFactor(f"{M} does not divide the norm polynomial {N}")
    R = P - M.to_spoly()
    scale = max(P.scale(), M.scale())
    r1, r0 = R[1], R[0]
    if R.degree < 1 or r1.is_zero(scale):
        return None
    if tol.is_zero(r1.norm(), r1.scale() ** 2):
        return None
    h2 = _polish_zero(P, -mul(inverse(r1), r0))
    try:
        Q = quotient_by_right_linear(P, h2)
    except NotARightZero:
        return None
    h1 = -mul(inverse(Q[1]), Q[0])
    return h1, h2


def _classify_remainder(P: SPoly, M: RPoly) -> RemainderCandidate:
    R = P - M.to_spoly()
    scale = max(P.scale(), M.scale())
    r1, r0 = R[1], R[0]
    if R.degree < 1 or r1.is_zero(scale):
        return RemainderCandidate(M, R, RemainderClass.Constant)
    if r0.is_zero(scale) or coefficient_rank([r0, r1]) < 2:
        return RemainderCandidate(M, R, RemainderClass.DependentCoefficients)
    if not tol.is_zero(r1.norm(), r1.scale() ** 2):
        return RemainderCandidate(M, R, RemainderClass.UniqueRoot)
    return RemainderCandidate(M, R, RemainderClass.NullLine, ruling_type(r0, r1))


def remainder_candidates(P: SPoly) -> list[RemainderCandidate]:
    """One entry per real monic quadratic factor ``M`` of the norm polynomial."""
    P = _check_quadratic(P)
    N = norm_poly(P)
    if N.is_zero():
        from .errors import VanishingNormPolynomial
        raise VanishingNormPolynomial("norm polynomial vanishes identically")
    N = N * (1.0 / N.coeffs[-1])
    factors: list[RPoly] = []
    for M1, M2 in real_quadratic_factor_pairings(real_quartic_roots(N)):
        for M in (M1, M2):
            if not any(M.allclose(F, 1e-9 * (1 + M.scale())) for F in factors):
                factors.append(M)
    factors.sort(key=lambda M: (M.coeffs[1], M.coeffs[0]))
    return [_classify_remainder(P, M) for M in factors]


def has_independent_linear_remainder(P: SPoly) -> bool:
    """Whether some remainder polynomial has degree one and independent coefficients."""
    P = _check_quadratic(P)
    a = P.leading
    if not (a - ONE).is_zero():
        P = SPoly([mul(inverse(a), c) for c in P.coeffs])
    return any(c.classification in (RemainderClass.UniqueRoot, RemainderClass.NullLine)
               for c in remainder_candidates(P))


# ----------------------------------------------------------------------------
# monic polynomials with independent coefficients


class NullRemainderConstruction(NamedTuple):
    h: SplitQuaternion
    lambda_: float
    mu: float
    zero: SplitQuaternion


def null_remainder_construction(M1: RPoly, R1: SPoly) -> NullRemainderConstruction:
    """Common right zero of ``t² + m`` and ``r1 t + r0`` on a right ruling, with its parts.

    ``h`` solves ``r1 h = -r0``; the zero is ``h + λ r̄1 + μ r̄1 i`` with
    ``λ, μ`` fixed by norm ``m`` and vanishing scalar part.
    """
    if M1.degree != 2 or not tol.is_zero(M1.coeffs[1], M1.scale()):
        raise ValueError("M1 must have the form t² + m")
    m = M1.coeffs[0] / M1.coeffs[2]
    r1, r0 = R1[1], R1[0]
    h, _ = solve_division_plane(-r0, r1, "right")
    d1 = r1.conj()
    d2 = mul(d1, I)
    A = np.array([
        [-2.0 * r0.h0, -2.0 * mul(r0.conj(), I).h0],
        [d1.h0, d2.h0],
    ])
    rhs = np.array([m - h.norm(), -h.h0])
    det = np.linalg.det(A)
    if abs(det) <= tol.threshold(1.0) * float(np.prod(np.max(np.abs(A), axis=1))):
        raise SingularSystem("positive parts of r0 and r1 are linearly dependent")
    lam, mu = (float(v) for v in np.linalg.solve(A, rhs))
    return NullRemainderConstruction(h, lam, mu, h + d1 * lam + d2 * mu)


def common_zero_on_null_remainder(M1: RPoly, R1: SPoly) -> SplitQuaternion:
    """Common right zero of ``t² + m`` and a remainder ``r1 t + r0`` on a right ruling."""
    return null_remainder_construction(M1, R1).zero


def _zero_from_null_candidate(P: SPoly, cand: RemainderCandidate):
    m1 = cand.M.coeffs[1]
    s = -m1 / 2.0
    Ps = reparametrize(P, s)
    Ms = cand.M.shift(s)
    Ms = RPoly([Ms.coeffs[0], 0.0, 1.0])
    x = common_zero_on_null_remainder(Ms, Ps - Ms.to_spoly())
    x = _polish_zero(P, x + s)
    if not eval_right(P, x).is_zero(P.scale() * max(1.0, x.scale()) ** 2):
        return None
    return x


def factor_independent(P: SPoly):
    """Zeros ``(h1, h2)`` of a monic quadratic whose coefficients 1, b, c are independent."""
    P = _check_quadratic(P)
    if coefficient_rank([ONE, P[1], P[0]]) < 3:
        raise DependentCoefficients("1, b, c are linearly dependent")
    zeros, _ = _factor_independent(P)
    return zeros


def _factor_independent(P: SPoly):
    cands = remainder_candidates(P)
    for cand in cands:
        if cand.classification is RemainderClass.UniqueRoot:
            zeros = factor_generic(P, cand.M, check_factor=False)
            if zeros is not None:
                return zeros, {"M": cand.M, "path": "generic"}
    nulls = [c for c in cands if c.classification is RemainderClass.NullLine]
    nulls.sort(key=lambda c: c.ruling is not RulingClass.RightRuling)
    for cand in nulls:
        try:
            x = _zero_from_null_candidate(P, cand)
        except (WrongRuling, SingularSystem, NotInvertible):
            continue
        if x is not None:
            return (-P[1] - x, x), {"M": cand.M, "path": "null remainder",
                                    "ruling": cand.ruling}
    raise InternalInconsistency("no remainder candidate produced a zero")


# ----------------------------------------------------------------------------
# monic dispatch


def _factor_monic(M: SPoly) -> FactorizationOutcome:
    """Factor a monic quadratic; the returned witness has unit 1."""
    s = -M[1].h0 / 2.0
    Mc = reparametrize(M, s)
    b = Mc[1].vector
    c = Mc[0]
    Mc = SPoly([c, b, ONE])
    rank = coefficient_rank([ONE, b, c])
    if rank == 1:
        zs = factor_monic_real(c.h0)
        x = zs.sample_zeros[0]
        out = _outcome(CaseLabel.RealPolynomial, _monic_witness(Mc, x), Mc,
                       {"c0": c.h0, "quadric": zs.quadric})
    elif rank == 2 and coefficient_rank([ONE, b]) == 1:
        out = factor_monic_b_real(c)
    elif rank == 2:
        (lam, mu), err = _lstsq([ONE, b], c)
        if err > _DECOMPOSITION_RTOL * max(1.0, c.scale()):
            raise InternalInconsistency(f"c = λ + μ b fails with residual {err:g}")
        out = factor_monic_dependent(b, float(lam), float(mu))
    else:
        zeros, cert = _factor_independent(Mc)
        w = Witness.from_zeros(ONE, *zeros)
        out = _outcome(CaseLabel.Independent, w, Mc, cert)
    out.certificate["shift"] = s
    if out.witness is None:
        return out
    w = out.witness.shifted(s)
    return FactorizationOutcome(out.label, True, w, out.certificate, w.residual(M))


# ----------------------------------------------------------------------------
# vanishing norm polynomial


def factorize_null_norm(P: SPoly) -> FactorizationOutcome:
    """Factor a quadratic whose curve lies on the null quadric."""
    P = SPoly(P.coeffs) if isinstance(P, SPoly) else SPoly(P)
    a = P[2]
    if a.is_zero(P.scale()):
        raise ZeroLeadingCoefficient("leading coefficient must be nonzero")
    if not norm_poly(P).is_zero():
        raise NormPolyNotZero("the norm polynomial does not vanish")
    a, b, c = P[2], P[1], P[0]
    if coefficient_rank([a, b, c]) == 3:
        h = _polish_zero(P, -mul(inverse(b), c))
        Q = quotient_by_right_linear(P, h)
        w = Witness.from_factors(Q, SPoly.linear_factor(h))
        return _outcome(CaseLabel.NullNormIndependent, w, P, {"zero": h})
    scale = P.scale() ** 2
    right = mul(a.conj(), b).is_zero(scale) and mul(a.conj(), c).is_zero(scale)
    Pr = P if right else P.conj()
    cert: dict[str, Any] = {"layout": "right" if right else "left"}
    M, unit = _null_dependent_monic(Pr, cert)
    inner = _factor_monic(M)
    cert["inner"] = inner.label.value
    if inner.witness is None:
        raise InternalInconsistency("the monic part of a null dependent polynomial did not factor")
    k1, k2 = inner.witness.h1, inner.witness.h2
    if right:
        w = Witness.from_zeros(unit, k1, k2)
    else:
        # P = conj(ā (t - k1)(t - k2)) = (t - k̄2) (t - k̄1) a
        w = Witness.from_factors(SPoly.linear_factor(k2.conj()),
                                 SPoly.linear_factor(k1.conj()) * SPoly([P[2]]))
    return _outcome(CaseLabel.NullNormDependent, w, P, cert)


def _null_dependent_monic(P: SPoly, cert: dict) -> tuple[SPoly, SplitQuaternion]:
    """Write ``P = a M`` with ``M`` monic for coefficients on a right ruling through ``[a]``."""
    a, b, c = P[2], P[1], P[0]
    scale = P.scale()

    def multiple_of_a(v):
        (g,), err = _lstsq([a], v)
        if err > _DECOMPOSITION_RTOL * max(1.0, scale):
            raise InternalInconsistency(f"{v} is not a real multiple of {a}")
        return float(g)

    def right_quotient(v):
        if v.is_zero(scale):
            return ZERO
        try:
            h, _ = solve_division_plane(v, a, "right")
        except WrongRuling as exc:
            raise InternalInconsistency(str(exc)) from None
        return h

    if b.is_zero(scale):
        if c.is_zero(scale) or coefficient_rank([a, c]) == 1:
            gamma = 0.0 if c.is_zero(scale) else multiple_of_a(c)
            cert["subcase"] = "b = 0, [c] = [a]"
            return SPoly([SplitQuaternion.real(gamma), ZERO, ONE]), a
        cert["subcase"] = "b = 0, [c] != [a]"
        return SPoly([right_quotient(c), ZERO, ONE]), a
    if coefficient_rank([a, b]) == 1:
        alpha = multiple_of_a(b)
        cert["subcase"] = "[b] = [a]"
        cert["decomposition"] = DependentDecomposition(alpha=alpha)
        return SPoly([right_quotient(c), SplitQuaternion.real(alpha), ONE]), a
    h = right_quotient(b)
    if c.is_zero(scale):
        alpha = beta = 0.0
    else:
        (alpha, beta), err = _lstsq([a, b], c)
        if err > _DECOMPOSITION_RTOL * max(1.0, scale):
            raise InternalInconsistency(f"c = α a + β b fails with residual {err:g}")
    cert["subcase"] = "[b] != [a]"
    cert["decomposition"] = DependentDecomposition(alpha=float(alpha), beta=float(beta))
    return SPoly([h * float(beta) + float(alpha), h, ONE]), a


# ----------------------------------------------------------------------------
# dispatcher


def _reparametrization_point(P: SPoly) -> float:
    N = norm_poly(P)
    s4 = P.scale() ** 4
    for k in itertools.count():
        s = float((k + 1) // 2 * (1 if k % 2 else -1))
        if not tol.is_zero(N(s), s4 * (1.0 + abs(s)) ** 4):
            return s
    raise AssertionError("unreachable")


def _factorize_noninvertible_lead(P: SPoly) -> FactorizationOutcome:
    s = _reparametrization_point(P)
    # Q(t) = t² P(s + 1/t) has the invertible leading coefficient P(s)
    Q = SPoly([P[2], P.derivative().at_real(s), P.at_real(s)])
    inner = factorize(Q)
    cert = {"s": s, "inner_case": inner.label.value, "inner": inner.certificate}
    if not inner.factorizable:
        return FactorizationOutcome(CaseLabel.NonInvertibleLeadReparametrized, False, None, cert)
    left_q, right_q = inner.witness.left, inner.witness.right

    def back(L: SPoly) -> SPoly:
        # u t + v  ->  v x + (u - s v)
        u, v = L[1], L[0]
        return SPoly([u - v * s, v])

    w = _refine(P, Witness.from_factors(back(left_q), back(right_q)))
    return _outcome(CaseLabel.NonInvertibleLeadReparametrized, w, P, cert)


def factorize(P) -> FactorizationOutcome:
    """Decide factorizability of a quadratic and produce one witness when it exists."""
    P = _check_quadratic(P)
    if norm_poly(P).is_zero():
        return factorize_null_norm(P)
    a = P.leading
    try:
        a_inv = inverse(a)
    except NotInvertible:
        return _factorize_noninvertible_lead(P)
    M = SPoly([mul(a_inv, c) for c in P.coeffs[:-1]] + [ONE])
    inner = _factor_monic(M)
    if inner.witness is None:
        return inner
    w = inner.witness.scaled(a)
    return FactorizationOutcome(inner.label, True, w, inner.certificate, w.residual(P))


def enumerate_factorizations(P, grid: int = 3) -> list[Witness]:
    """A finite sample of factorizations of ``P``.

    Contains the canonical witness, one witness per real quadratic factor of
    the norm polynomial that yields a zero, and for polynomials with
    infinitely many zeros in the ``b = 0`` cases a few further members of the
    zero family.
    """
    P = _check_quadratic(P)
    out: list[Witness] = []

    def add(w: Witness | None):
        if w is None or w.residual(P) > 1e-8 * max(1.0, P.scale()):
            return
        if any(w.expand().allclose(o.expand()) and _same_zeros(w, o) for o in out):
            return
        out.append(w)

    main = factorize(P)
    if not main.factorizable:
        return out
    add(main.witness)
    a = P.leading
    try:
        a_inv = inverse(a)
    except NotInvertible:
        return out
    if norm_poly(P).is_zero():
        return out
    M = SPoly([mul(a_inv, c) for c in P.coeffs[:-1]] + [ONE])
    for cand in remainder_candidates(M):
        zeros = None
        if cand.classification is RemainderClass.UniqueRoot:
            zeros = factor_generic(M, cand.M, check_factor=False)
        elif cand.classification is RemainderClass.NullLine:
            try:
                x = _zero_from_null_candidate(M, cand)
            except (WrongRuling, SingularSystem, NotInvertible):
                x = None
            zeros = None if x is None else (-M[1] - x, x)
        if zeros is not None:
            add(Witness.from_zeros(a, *zeros))
    s = -M[1].h0 / 2.0
    Mc = reparametrize(M, s)
    if Mc[1].vector.is_zero(Mc.scale()):
        for x in _b_zero_family(Mc[0], grid):
            add(Witness.from_zeros(a, -Mc[1] - x + s, x + s))
    return out


def _same_zeros(w: Witness, o: Witness) -> bool:
    if not (w.canonical and o.canonical):
        return False
    return w.h2.allclose(o.h2, 1e-9) and w.h1.allclose(o.h1, 1e-9)


def _b_zero_family(c: SplitQuaternion, grid: int) -> list[SplitQuaternion]:
    """Several zeros of ``t² + c``."""
    if c.vector.is_zero(c.scale()):
        c0 = c.h0
        zs = list(factor_monic_real(c0).sample_zeros)
        # points of {Sc(x) = 0, x x̄ = c0}: x1² = c0 + x2² + x3²
        for x2, x3 in itertools.product(range(-grid + 2, grid - 1), repeat=2):
            x1sq = c0 + x2 * x2 + x3 * x3
            if x1sq >= 0:
                zs.append(SplitQuaternion(0.0, math.sqrt(x1sq), float(x2), float(x3)))
        return zs
    zs = []
    for sign_outer, sign_inner in itertools.product((1, -1), repeat=2):
        rad = -c.h0 + sign_inner * math.sqrt(max(0.0, c.norm()))
        if c.norm() < 0 or rad <= 0:
            continue
        x0 = sign_outer * math.sqrt(rad / 2)
        zs.append(SplitQuaternion(x0, -c.h1 / (2 * x0), -c.h2 / (2 * x0), -c.h3 / (2 * x0)))
    return zs
