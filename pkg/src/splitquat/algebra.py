"""Arithmetic of split quaternions.

Basis ``{1, i, j, k}`` with ``i² = -1``, ``j² = k² = 1`` and ``ij = k``.
The norm ``h h̄ = h0² + h1² - h2² - h3²`` is indefinite of signature (2, 2)
and vanishes on the null cone, whose nonzero elements are zero divisors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import tolerance as tol
from .errors import NotInvertible

__all__ = [
    "SplitQuaternion", "ONE", "ZERO", "I", "J", "K",
    "mul", "conj", "norm", "bilinear_q", "inverse", "parts",
    "left_matrix", "right_matrix", "to_matrix", "from_matrix", "as_sq",
    "span_basis", "span_rank",
]


@dataclass(frozen=True, slots=True)
class SplitQuaternion:
    h0: float = 0.0
    h1: float = 0.0
    h2: float = 0.0
    h3: float = 0.0

    @classmethod
    def from_seq(cls, seq: Iterable[float]) -> "SplitQuaternion":
        h0, h1, h2, h3 = (float(x) for x in seq)
        return cls(h0, h1, h2, h3)

    @classmethod
    def real(cls, x: float) -> "SplitQuaternion":
        return cls(float(x), 0.0, 0.0, 0.0)

    def __iter__(self) -> Iterator[float]:
        yield self.h0
        yield self.h1
        yield self.h2
        yield self.h3

    def coords(self) -> tuple[float, float, float, float]:
        return (self.h0, self.h1, self.h2, self.h3)

    def to_array(self) -> np.ndarray:
        return np.array(self.coords(), dtype=float)

    def __add__(self, other):
        if isinstance(other, SplitQuaternion):
            return SplitQuaternion(self.h0 + other.h0, self.h1 + other.h1,
                                   self.h2 + other.h2, self.h3 + other.h3)
        if isinstance(other, (int, float)):
            return SplitQuaternion(self.h0 + other, self.h1, self.h2, self.h3)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return SplitQuaternion(-self.h0, -self.h1, -self.h2, -self.h3)

    def __sub__(self, other):
        if isinstance(other, (SplitQuaternion, int, float)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, SplitQuaternion):
            return mul(self, other)
        if isinstance(other, (int, float)):
            return SplitQuaternion(self.h0 * other, self.h1 * other,
                                   self.h2 * other, self.h3 * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self * (1.0 / other)
        return NotImplemented

    def conj(self) -> "SplitQuaternion":
        return SplitQuaternion(self.h0, -self.h1, -self.h2, -self.h3)

    def norm(self) -> float:
        return self.h0 * self.h0 + self.h1 * self.h1 - self.h2 * self.h2 - self.h3 * self.h3

    @property
    def scalar(self) -> float:
        return self.h0

    @property
    def vector(self) -> "SplitQuaternion":
        return SplitQuaternion(0.0, self.h1, self.h2, self.h3)

    @property
    def positive_part(self) -> "SplitQuaternion":
        """The component ``h0 + h1 i`` (a copy of the complex numbers)."""
        return SplitQuaternion(self.h0, self.h1, 0.0, 0.0)

    @property
    def negative_part(self) -> "SplitQuaternion":
        return SplitQuaternion(0.0, 0.0, self.h2, self.h3)

    def scale(self) -> float:
        """Largest absolute coordinate."""
        return max(abs(self.h0), abs(self.h1), abs(self.h2), abs(self.h3))

    def euclid(self) -> float:
        return math.sqrt(self.h0 ** 2 + self.h1 ** 2 + self.h2 ** 2 + self.h3 ** 2)

    def is_zero(self, scale: float | None = None) -> bool:
        s = self.scale()
        return s <= tol.threshold(1.0 if scale is None else scale)

    def is_real(self, scale: float | None = None) -> bool:
        return self.vector.is_zero(self.scale() if scale is None else scale)

    def allclose(self, other: "SplitQuaternion", atol: float = 1e-9) -> bool:
        return (self - other).scale() <= atol

    def __repr__(self) -> str:
        return f"SplitQuaternion({self.h0!r}, {self.h1!r}, {self.h2!r}, {self.h3!r})"

    def __str__(self) -> str:
        parts = [f"{self.h0:g}"]
        for val, unit in ((self.h1, "i"), (self.h2, "j"), (self.h3, "k")):
            sign = "-" if val < 0 else "+"
            parts.append(f" {sign} {abs(val):g}{unit}")
        return "".join(parts)


ZERO = SplitQuaternion(0.0, 0.0, 0.0, 0.0)
ONE = SplitQuaternion(1.0, 0.0, 0.0, 0.0)
I = SplitQuaternion(0.0, 1.0, 0.0, 0.0)
J = SplitQuaternion(0.0, 0.0, 1.0, 0.0)
K = SplitQuaternion(0.0, 0.0, 0.0, 1.0)


def as_sq(x) -> SplitQuaternion:
    if isinstance(x, SplitQuaternion):
        return x
    if isinstance(x, (int, float)):
        return SplitQuaternion.real(x)
    return SplitQuaternion.from_seq(x)


def mul(h: SplitQuaternion, g: SplitQuaternion) -> SplitQuaternion:
    a0, a1, a2, a3 = h.h0, h.h1, h.h2, h.h3
    b0, b1, b2, b3 = g.h0, g.h1, g.h2, g.h3
    return SplitQuaternion(
        a0 * b0 - a1 * b1 + a2 * b2 + a3 * b3,
        a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
        a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
        a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
    )


def conj(h: SplitQuaternion) -> SplitQuaternion:
    return h.conj()


def norm(h: SplitQuaternion) -> float:
    return h.norm()


def bilinear_q(h: SplitQuaternion, g: SplitQuaternion) -> float:
    """Polarization of the norm: ``q(h, g) = (h ḡ + g h̄) / 2``."""
    return h.h0 * g.h0 + h.h1 * g.h1 - h.h2 * g.h2 - h.h3 * g.h3


def inverse(h: SplitQuaternion) -> SplitQuaternion:
    n = h.norm()
    s = h.scale()
    if tol.is_zero(n, s * s):
        raise NotInvertible(f"{h} lies on the null cone (norm {n:g})")
    return h.conj() * (1.0 / n)


def parts(h: SplitQuaternion) -> tuple[float, SplitQuaternion]:
    """Split ``h`` into its scalar part and vector part."""
    return h.h0, h.vector


def left_matrix(h: SplitQuaternion) -> np.ndarray:
    """Matrix of ``x -> h x`` acting on coordinate vectors."""
    a0, a1, a2, a3 = h.coords()
    return np.array([
        [a0, -a1, a2, a3],
        [a1, a0, a3, -a2],
        [a2, a3, a0, -a1],
        [a3, -a2, a1, a0],
    ])


def right_matrix(h: SplitQuaternion) -> np.ndarray:
    """Matrix of ``x -> x h`` acting on coordinate vectors."""
    b0, b1, b2, b3 = h.coords()
    return np.array([
        [b0, -b1, b2, b3],
        [b1, b0, -b3, b2],
        [b2, -b3, b0, b1],
        [b3, b2, -b1, b0],
    ])


# 1 -> identity, i -> [[0,-1],[1,0]], j -> [[1,0],[0,-1]], k = ij -> [[0,1],[1,0]];
# the determinant of the image equals the norm.
def to_matrix(h: SplitQuaternion) -> np.ndarray:
    h0, h1, h2, h3 = h.coords()
    return np.array([[h0 + h2, h3 - h1], [h1 + h3, h0 - h2]])


def from_matrix(m) -> SplitQuaternion:
    (p, q), (r, s) = np.asarray(m, dtype=float)
    return SplitQuaternion((p + s) / 2, (r - q) / 2, (p - s) / 2, (q + r) / 2)


RANK_RTOL = 1e-8


def span_basis(vectors: Iterable[SplitQuaternion], rtol: float = RANK_RTOL,
               normalize: bool = True) -> list[SplitQuaternion]:
    """Euclidean-orthonormal basis of the real span of ``vectors``.

    With ``normalize`` each vector is scaled to unit length first (the right
    choice for projective representatives); otherwise sizes are kept, so a
    vector that is tiny next to the others does not count as a direction.
    Singular values below ``rtol`` times the largest one are discarded.
    """
    rows = []
    for v in vectors:
        n = v.euclid()
        if n > 0.0:
            rows.append(v.to_array() / n if normalize else v.to_array())
    if not rows:
        return []
    _, sv, vt = np.linalg.svd(np.array(rows))
    keep = int(np.sum(sv > rtol * sv[0]))
    return [SplitQuaternion.from_seq(vt[m]) for m in range(keep)]


def span_rank(vectors: Iterable[SplitQuaternion], rtol: float = RANK_RTOL,
              normalize: bool = True) -> int:
    return len(span_basis(vectors, rtol, normalize))
