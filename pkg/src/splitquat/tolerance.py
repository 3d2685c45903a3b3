"""Global zero-test policy.

A quantity ``x`` counts as zero when ``|x| <= eps * max(1, scale)``, where
``scale`` is the magnitude of the inputs that produced ``x``.  The default
``eps`` is ``1e-9``; it can be changed globally or temporarily with
:func:`tolerance`.
"""
from __future__ import annotations

import contextlib
from contextvars import ContextVar

DEFAULT_EPS = 1e-9

_eps: ContextVar[float] = ContextVar("splitquat_eps", default=DEFAULT_EPS)


def get_eps() -> float:
    return _eps.get()


def set_eps(eps: float) -> None:
    if not eps > 0:
        raise ValueError("tolerance must be positive")
    _eps.set(float(eps))


@contextlib.contextmanager
def tolerance(eps: float):
    """Temporarily use ``eps`` for all zero tests in the current context."""
    if not eps > 0:
        raise ValueError("tolerance must be positive")
    token = _eps.set(float(eps))
    try:
        yield eps
    finally:
        _eps.reset(token)


def threshold(scale: float = 1.0) -> float:
    return _eps.get() * max(1.0, abs(scale))


def is_zero(x: float, scale: float = 1.0) -> bool:
    return abs(x) <= threshold(scale)


def is_positive(x: float, scale: float = 1.0) -> bool:
    return x > threshold(scale)


def is_negative(x: float, scale: float = 1.0) -> bool:
    return x < -threshold(scale)
