"""Left polynomials over the split quaternions and real helper polynomials.

Coefficient lists are stored in ascending order (``coeffs[0]`` is the
constant term).  The indeterminate ``t`` commutes with every coefficient, so
``(a t^m)(b t^n) = (a b) t^(m+n)``; evaluation substitutes ``t`` on the right
of each coefficient.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import tolerance as tol
from .algebra import ONE, ZERO, SplitQuaternion, as_sq, inverse, mul
from .errors import (
    DegreeMismatch,
    InternalInconsistency,
    LeadingCoefficientNotInvertible,
    NotARightZero,
    NotConjugationClosed,
    NotInvertible,
)

__all__ = [
    "SPoly", "RPoly", "poly_arith", "conj_poly", "norm_poly", "eval_right",
    "quotient_by_right_linear", "reparametrize", "monic_reduce",
    "poly_roots", "real_quartic_roots", "real_quadratic_factor_pairings",
    "has_real_factor", "right_divide",
]


def _binomial_shift(coeffs: Sequence, s: float, zero):
    """Coefficients of ``sum c_l (t + s)^l``; works for scalars and quaternions."""
    n = len(coeffs)
    out = [zero] * n
    for ell, c in enumerate(coeffs):
        for m in range(ell + 1):
            out[m] = out[m] + c * (math.comb(ell, m) * s ** (ell - m))
    return out


@dataclass(frozen=True)
class RPoly:
    """Real polynomial with ascending coefficients."""

    coeffs: tuple[float, ...]

    def __init__(self, coeffs: Iterable[float]):
        cs = [float(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0.0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs) if cs else (0.0,))

    @classmethod
    def from_roots(cls, roots: Iterable[complex]) -> "RPoly":
        cs: list[complex] = [1.0]
        for r in roots:
            nxt = [0j] * (len(cs) + 1)
            for m, c in enumerate(cs):
                nxt[m + 1] += c
                nxt[m] -= r * c
            cs = nxt
        return cls(complex(c).real for c in cs)

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0] == 0.0:
            return -1
        return len(self.coeffs) - 1

    def scale(self) -> float:
        return max(abs(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0.0 for c in self.coeffs)

    def __call__(self, x):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RPoly":
        return RPoly([m * c for m, c in enumerate(self.coeffs)][1:] or [0.0])

    def __add__(self, other: "RPoly") -> "RPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0.0,) * (n - len(self.coeffs))
        b = other.coeffs + (0.0,) * (n - len(other.coeffs))
        return RPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "RPoly":
        return RPoly(-c for c in self.coeffs)

    def __sub__(self, other: "RPoly") -> "RPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return RPoly(c * other for c in self.coeffs)
        if isinstance(other, RPoly):
            out = [0.0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for m, a in enumerate(self.coeffs):
                for n, b in enumerate(other.coeffs):
                    out[m + n] += a * b
            return RPoly(out)
        return NotImplemented

    __rmul__ = __mul__

    def divmod(self, other: "RPoly") -> tuple["RPoly", "RPoly"]:
        num = list(self.coeffs)
        den = other.coeffs
        if other.degree < 0:
            raise ZeroDivisionError("division by the zero polynomial")
        dq = len(num) - len(den)
        if dq < 0:
            return RPoly([0.0]), self
        quot = [0.0] * (dq + 1)
        for k in range(dq, -1, -1):
            q = num[k + len(den) - 1] / den[-1]
            quot[k] = q
            for m, d in enumerate(den):
                num[k + m] -= q * d
        return RPoly(quot), RPoly(num[: len(den) - 1] or [0.0])

    def to_spoly(self) -> "SPoly":
        return SPoly([SplitQuaternion.real(c) for c in self.coeffs])

    def shift(self, s: float) -> "RPoly":
        """The polynomial ``t -> self(t + s)``."""
        return RPoly(_binomial_shift(self.coeffs, s, 0.0))

    def allclose(self, other: "RPoly", atol: float = 1e-9) -> bool:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0.0,) * (n - len(self.coeffs))
        b = other.coeffs + (0.0,) * (n - len(other.coeffs))
        return all(abs(x - y) <= atol for x, y in zip(a, b))

    def __repr__(self) -> str:
        return f"RPoly({list(self.coeffs)!r})"


@dataclass(frozen=True)
class SPoly:
    """Left polynomial ``sum coeffs[l] t^l`` with split quaternion coefficients.

    Trailing coefficients whose coordinates are all below the tolerance
    (relative to the largest coordinate of the polynomial) are dropped on
    construction; the zero polynomial keeps a single zero coefficient.
    """

    coeffs: tuple[SplitQuaternion, ...]

    def __init__(self, coeffs: Iterable):
        cs = [as_sq(c) for c in coeffs]
        if cs:
            s = max(c.scale() for c in cs)
            while len(cs) > 1 and cs[-1].is_zero(s):
                cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs) if cs else (ZERO,))

    @classmethod
    def quadratic(cls, a, b, c) -> "SPoly":
        return cls([c, b, a])

    @classmethod
    def linear_factor(cls, h) -> "SPoly":
        """The monic linear polynomial ``t - h``."""
        return cls([-as_sq(h), ONE])

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0].scale() == 0.0:
            return -1
        return len(self.coeffs) - 1

    @property
    def leading(self) -> SplitQuaternion:
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> SplitQuaternion:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def scale(self) -> float:
        return max(c.scale() for c in self.coeffs)

    def __add__(self, other):
        other = _as_spoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SPoly(self[m] + other[m] for m in range(n))

    __radd__ = __add__

    def __neg__(self) -> "SPoly":
        return SPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_spoly(other))

    def __rsub__(self, other):
        return _as_spoly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return SPoly(c * other for c in self.coeffs)
        other = _as_spoly(other)
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for m, a in enumerate(self.coeffs):
            for n, b in enumerate(other.coeffs):
                out[m + n] = out[m + n] + mul(a, b)
        return SPoly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        return _as_spoly(other) * self

    def conj(self) -> "SPoly":
        return SPoly(c.conj() for c in self.coeffs)

    def __call__(self, h) -> SplitQuaternion:
        return eval_right(self, h)

    def at_real(self, t: float) -> SplitQuaternion:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "SPoly":
        return SPoly([c * m for m, c in enumerate(self.coeffs)][1:] or [ZERO])

    def allclose(self, other: "SPoly", atol: float = 1e-9) -> bool:
        other = _as_spoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self[m].allclose(other[m], atol) for m in range(n))

    def __repr__(self) -> str:
        return f"SPoly({[c.coords() for c in self.coeffs]!r})"

    def __str__(self) -> str:
        terms = []
        for m in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[m]
            if c.scale() == 0.0 and len(self.coeffs) > 1:
                continue
            power = "" if m == 0 else ("t" if m == 1 else f"t^{m}")
            terms.append(f"({c}){power}")
        return " + ".join(terms)


def _as_spoly(x) -> SPoly:
    if isinstance(x, SPoly):
        return x
    if isinstance(x, RPoly):
        return x.to_spoly()
    return SPoly([as_sq(x)])


def poly_arith(P: SPoly, Q: SPoly, which: str) -> SPoly:
    if which == "add":
        return P + Q
    if which == "sub":
        return P - Q
    if which == "mul":
        return P * Q
    raise ValueError(f"unknown operation {which!r}")


def conj_poly(P: SPoly) -> SPoly:
    return P.conj()


def norm_poly(P: SPoly) -> RPoly:
    """The real polynomial ``P P̄``.

    Coefficients below the tolerance (relative to the squared scale of ``P``)
    are snapped to exactly zero.
    """
    prod = P * P.conj()
    s2 = P.scale() ** 2
    out = []
    for c in prod.coeffs:
        if not c.vector.is_zero(s2):
            raise InternalInconsistency(f"norm polynomial has vector part {c.vector}")
        out.append(0.0 if tol.is_zero(c.h0, s2) else c.h0)
    return RPoly(out)


def eval_right(P: SPoly, h) -> SplitQuaternion:
    h = as_sq(h)
    acc = ZERO
    for c in reversed(P.coeffs):
        acc = mul(acc, h) + c
    return acc


def right_divide(P: SPoly, h) -> tuple[SPoly, SplitQuaternion]:
    """Quotient and remainder of ``P = Q (t - h) + r``; the remainder equals ``P(h)``."""
    h = as_sq(h)
    work = list(P.coeffs)
    n = len(work) - 1
    quot = [ZERO] * max(n, 1)
    for k in range(n, 0, -1):
        q = work[k]
        quot[k - 1] = q
        work[k - 1] = work[k - 1] + mul(q, h)
    return SPoly(quot), work[0]


def quotient_by_right_linear(P: SPoly, h) -> SPoly:
    """Return ``Q`` with ``P = Q (t - h)``; ``h`` must be a right zero of ``P``."""
    h = as_sq(h)
    Q, rem = right_divide(P, h)
    scale = P.scale() * max(1.0, h.scale()) ** max(P.degree, 1)
    if not rem.is_zero(scale):
        raise NotARightZero(f"P({h}) = {rem} is not zero")
    return Q


def reparametrize(P, s: float):
    """``P(t + s)`` expanded in powers of ``t``."""
    if isinstance(P, RPoly):
        return P.shift(s)
    return SPoly(_binomial_shift(P.coeffs, float(s), ZERO))


def monic_reduce(P: SPoly) -> tuple[SplitQuaternion, SPoly]:
    a = P.leading
    try:
        a_inv = inverse(a)
    except NotInvertible as exc:
        raise LeadingCoefficientNotInvertible(str(exc)) from None
    M = SPoly([mul(a_inv, c) for c in P.coeffs[:-1]] + [ONE])
    return a, M


# ----------------------------------------------------------------------------
# real roots


_SNAP = 1e-7
_CLUSTER = 1e-6
_LOOSE_CLUSTER = 1e-2


def _durand_kerner(coeffs: Sequence[float], maxiter: int = 200) -> list[complex]:
    lead = coeffs[-1]
    mon = [c / lead for c in coeffs]
    n = len(mon) - 1
    bound = 1.0 + max(abs(c) for c in mon[:-1])
    seed = complex(0.4, 0.9)
    z = [bound * seed ** k for k in range(n)]

    def f(x):
        acc = 0j
        for c in reversed(mon):
            acc = acc * x + c
        return acc

    for _ in range(maxiter):
        delta = 0.0
        for k in range(n):
            den = 1 + 0j
            for m in range(n):
                if m != k:
                    den *= z[k] - z[m]
            if den == 0:
                den = 1e-300
            step = f(z[k]) / den
            z[k] -= step
            delta = max(delta, abs(step) / (1.0 + abs(z[k])))
        if delta < 1e-15:
            break
    return z


def _newton_polish(coeffs: Sequence[float], z: complex, steps: int = 4) -> complex:
    p = RPoly(coeffs)
    dp = p.derivative()
    best, fbest = z, abs(p(z))
    for _ in range(steps):
        d = dp(best)
        if d == 0:
            break
        cand = best - p(best) / d
        fc = abs(p(cand))
        if fc < fbest:
            best, fbest = cand, fc
        else:
            break
    return best


def _components(roots: list[complex], radius: float) -> list[list[int]]:
    n = len(roots)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in itertools.combinations(range(n), 2):
        if abs(roots[a] - roots[b]) <= radius * (1.0 + abs(roots[a])):
            parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for a in range(n):
        groups.setdefault(find(a), []).append(a)
    return list(groups.values())


def _is_multiple_root(coeffs: Sequence[float], z: complex, m: int) -> bool:
    # z is an m-fold root when p, p', ..., p^(m-1) all vanish there
    p = RPoly(coeffs)
    for _ in range(m):
        size = sum(abs(c) * (1.0 + abs(z)) ** e for e, c in enumerate(p.coeffs))
        if abs(p(z)) > 1e-11 * size:
            return False
        p = p.derivative()
    return True


def _refine_multiple(coeffs: Sequence[float], z: complex, m: int) -> complex:
    # an m-fold root of p is a simple root of its (m-1)-th derivative
    d = RPoly(coeffs)
    for _ in range(m - 1):
        d = d.derivative()
    dd = d.derivative()
    for _ in range(8):
        slope = dd(z)
        if slope == 0:
            break
        step = d(z) / slope
        z -= step
        if abs(step) <= 1e-16 * (1.0 + abs(z)):
            break
    return z


def _cluster(coeffs: Sequence[float], roots: list[complex]) -> list[complex]:
    """Replace every cluster of roots by its centroid.

    Pairwise distance below ``_CLUSTER`` always merges.  Multiple roots that
    the iteration spread further apart (error of order eps^(1/m)) are merged
    when the derivatives up to order m-1 vanish at the centroid.
    """
    out = list(roots)
    for members in _components(out, _LOOSE_CLUSTER):
        if len(members) < 2:
            continue
        centre = _refine_multiple(coeffs, sum(out[m] for m in members) / len(members),
                                  len(members))
        if _is_multiple_root(coeffs, centre, len(members)):
            for m in members:
                out[m] = centre
    for members in _components(out, _CLUSTER):
        if len(members) > 1:
            centre = sum(out[m] for m in members) / len(members)
            for m in members:
                out[m] = centre
    return out


def _snap_real(z: complex) -> complex:
    if abs(z.imag) <= _SNAP * (1.0 + abs(z)):
        return complex(z.real, 0.0)
    return z


def _conjugate_symmetrize(roots: list[complex]) -> list[complex]:
    out = list(roots)
    todo = [k for k, z in enumerate(out) if z.imag != 0.0]
    while todo:
        k = todo.pop(0)
        if not todo:
            raise NotConjugationClosed(f"unpaired complex root {out[k]}")
        target = out[k].conjugate()
        m = min(todo, key=lambda idx: abs(out[idx] - target))
        todo.remove(m)
        avg = (out[k] + out[m].conjugate()) / 2
        out[k], out[m] = avg, avg.conjugate()
    return out


def poly_roots(N: RPoly) -> list[complex]:
    """All complex roots of a nonconstant real polynomial, with multiplicity.

    Durand-Kerner iteration followed by Newton polishing; near-real roots are
    snapped onto the real axis, clustered roots are replaced by the cluster
    centroid and complex roots are returned as exact conjugate pairs, sorted
    by real then imaginary part.
    """
    if N.degree < 1:
        raise DegreeMismatch(f"expected a nonconstant polynomial, got degree {N.degree}")
    coeffs = list(N.coeffs)
    if N.degree == 1:
        return [complex(-coeffs[0] / coeffs[1], 0.0)]
    z = _durand_kerner(coeffs)
    z = [_newton_polish(coeffs, r) for r in z]
    z = [_snap_real(r) for r in z]
    z = _cluster(coeffs, z)
    z = [_snap_real(r) for r in z]
    z = _conjugate_symmetrize(z)
    return sorted(z, key=lambda r: (r.real, r.imag))


def real_quartic_roots(N: RPoly) -> list[complex]:
    if N.degree != 4:
        raise DegreeMismatch(f"expected a quartic, got degree {N.degree}")
    return poly_roots(N)


def _is_conj(z: complex, w: complex) -> bool:
    return abs(z - w.conjugate()) <= _SNAP * (1.0 + abs(z))


def real_quadratic_factor_pairings(roots: Sequence[complex]) -> list[tuple[RPoly, RPoly]]:
    """All splittings of four roots into two real monic quadratic factors.

    Repeated roots occupy distinct slots, so a double root can yield the same
    pairing more than once.
    """
    roots = [complex(r) for r in roots]
    if len(roots) != 4:
        raise DegreeMismatch("expected four roots")
    for r in roots:
        if r.imag != 0.0 and not any(_is_conj(r, w) for w in roots):
            raise NotConjugationClosed(f"{r} has no conjugate partner")

    def real_factor(p, q):
        z, w = roots[p], roots[q]
        if (z.imag == 0.0 and w.imag == 0.0) or _is_conj(z, w):
            return RPoly([(z * w).real, -(z + w).real, 1.0])
        return None

    out = []
    for (p, q), (r, s) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        m1, m2 = real_factor(p, q), real_factor(r, s)
        if m1 is not None and m2 is not None:
            out.append((m1, m2))
    return out


def has_real_factor(P: SPoly) -> float | None:
    """A real root ``r`` of ``P`` (so ``t - r`` divides ``P``), or ``None``.

    Candidates are the real roots of the first coordinate polynomial that is
    not identically zero; each is checked against the full value ``P(r)``.
    """
    scale = P.scale()
    for m in range(4):
        coord = RPoly(c.coords()[m] for c in P.coeffs)
        if all(tol.is_zero(x, scale) for x in coord.coeffs):
            continue
        if coord.degree < 1:
            return None
        for z in poly_roots(coord):
            if z.imag == 0.0 and P.at_real(z.real).is_zero(scale * (1.0 + abs(z.real)) ** 2):
                return z.real
        return None
    return None
