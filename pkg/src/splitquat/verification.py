"""Independent checks: re-expansion residuals and a numeric right-zero search.

Nothing here imports the factorization engine.  :func:`search_zero` works on
the four real equations in the coordinates of ``x`` that express
``x² + b x + c = 0`` for ``Sc(b) = 0`` and never uses quaternion arithmetic,
so agreement with the engine is evidence from a second route.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import SplitQuaternion, as_sq
from .polynomials import SPoly

__all__ = [
    "ResidualReport", "verify_factorization", "verify_witness",
    "equation_system_residual", "search_zero",
]


@dataclass(frozen=True)
class ResidualReport:
    max_abs: float
    per_coefficient: tuple[float, ...]
    scale: float

    @property
    def relative(self) -> float:
        return self.max_abs / max(1.0, self.scale)

    def passes(self, rtol: float = 1e-8) -> bool:
        return self.max_abs <= rtol * max(1.0, self.scale)


def _report(P: SPoly, product: SPoly) -> ResidualReport:
    n = max(len(P.coeffs), len(product.coeffs))
    per = tuple((product[m] - P[m]).scale() for m in range(n))
    return ResidualReport(max(per), per, P.scale())


def verify_factorization(P: SPoly, unit, h1, h2) -> ResidualReport:
    """Deviation of ``unit (t - h1)(t - h2)`` from ``P``, coefficient by coefficient."""
    product = SPoly([as_sq(unit)]) * SPoly.linear_factor(h1) * SPoly.linear_factor(h2)
    return _report(P, product)


def verify_witness(P: SPoly, left: SPoly, right: SPoly) -> ResidualReport:
    return _report(P, left * right)


def _system(b: np.ndarray, c: np.ndarray, x: np.ndarray) -> np.ndarray:
    # rows of x: arbitrary leading shape, last axis the four coordinates
    x0, x1, x2, x3 = np.moveaxis(x, -1, 0)
    _, b1, b2, b3 = b
    c0, c1, c2, c3 = c
    return np.stack([
        x0 * x0 - x1 * x1 + x2 * x2 + x3 * x3 - b1 * x1 + b2 * x2 + b3 * x3 + c0,
        2 * x0 * x1 + b1 * x0 + b3 * x2 - b2 * x3 + c1,
        2 * x0 * x2 + b2 * x0 + b3 * x1 - b1 * x3 + c2,
        2 * x0 * x3 + b3 * x0 - b2 * x1 + b1 * x2 + c3,
    ], axis=-1)


def _jacobian(b: np.ndarray, x: np.ndarray) -> np.ndarray:
    x0, x1, x2, x3 = np.moveaxis(x, -1, 0)
    _, b1, b2, b3 = b
    one = np.ones_like(x0)
    rows = [
        [2 * x0, -2 * x1 - b1, 2 * x2 + b2, 2 * x3 + b3],
        [2 * x1 + b1, 2 * x0, b3 * one, -b2 * one],
        [2 * x2 + b2, b3 * one, 2 * x0, -b1 * one],
        [2 * x3 + b3, -b2 * one, b1 * one, 2 * x0],
    ]
    return np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)


def _check_b(b: SplitQuaternion) -> None:
    if abs(b.h0) > 1e-12 * max(1.0, b.scale()):
        raise ValueError("the equation system assumes Sc(b) = 0")


def equation_system_residual(b, c, x) -> tuple[float, float, float, float]:
    """Left-hand sides of the four real equations for ``x`` to be a zero of ``t² + bt + c``."""
    b, c, x = as_sq(b), as_sq(c), as_sq(x)
    _check_b(b)
    out = _system(b.to_array(), c.to_array(), x.to_array())
    return tuple(float(v) for v in out)


def search_zero(b, c, budget: int = 200, seed: int = 0, starts: int = 64,
                tol: float = 1e-9) -> SplitQuaternion | None:
    """Multi-start damped Newton search for a zero of ``t² + bt + c`` (``Sc(b) = 0``).

    Starting points are drawn uniformly from ``[-4, 4]⁴`` by a generator
    seeded with ``seed``.  Each Newton step solves the Levenberg-regularized
    normal equations and is halved up to 20 times until the residual drops.
    Starts that run off to infinity are abandoned.  Returns the zero found
    from the lowest-indexed successful start, or ``None``.
    """
    b, c = as_sq(b), as_sq(c)
    _check_b(b)
    bv, cv = b.to_array(), c.to_array()
    scale = max(1.0, b.scale(), c.scale())
    box = 100.0 * (1.0 + scale)
    rng = np.random.default_rng(seed)
    x = rng.uniform(-4.0, 4.0, size=(starts, 4))
    err = np.max(np.abs(_system(bv, cv, x)), axis=1)
    alive = np.ones(starts, dtype=bool)
    eye = np.eye(4)
    halvings = 0.5 ** np.arange(21)
    for _ in range(budget):
        idx = np.flatnonzero(alive & (err > tol))
        if len(idx) == 0:
            break
        xs = x[idx]
        f = _system(bv, cv, xs)
        J = _jacobian(bv, xs)
        Jt = np.swapaxes(J, -1, -2)
        step = np.linalg.solve(Jt @ J + 1e-8 * eye, -(Jt @ f[..., None]))[..., 0]
        # all 21 halvings at once; take the longest step that lowers the residual
        cand = xs[:, None, :] + halvings[None, :, None] * step[:, None, :]
        ec = np.max(np.abs(_system(bv, cv, cand)), axis=2)
        better = ec < err[idx, None]
        first = np.argmax(better, axis=1)
        moved = better[np.arange(len(idx)), first]
        pick = np.flatnonzero(moved)
        new_err = ec[pick, first[pick]]
        # a start that stops making progress sits at a local minimum of the residual
        slow = new_err > 0.999 * err[idx[pick]]
        x[idx[pick]] = cand[pick, first[pick]]
        err[idx[pick]] = new_err
        alive[idx[~moved]] = False
        alive[idx[pick[slow]]] = False
        alive[np.max(np.abs(x), axis=1) > box] = False
    found = np.flatnonzero((err <= tol) & (np.max(np.abs(x), axis=1) <= box))
    if len(found) == 0:
        return None
    return SplitQuaternion.from_seq(x[found[0]])
