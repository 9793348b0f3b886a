"""Trigamma at half-integer arguments.

Only ``psi'(n + 1/2)`` is provided. The finite identity

    psi'(n + 1/2) = pi**2 / 2 - 4 * sum_{k=1}^{n} (2k - 1)**-2

loses about ``log10(n)`` digits to cancellation when evaluated naively, so
the sum is carried in double-double form and rounded once at the end.
"""

import math

import numpy as np

from ._errors import DomainError

__all__ = ["CROSSOVER", "trigamma_half_integer", "trigamma_half_integer_sum",
           "trigamma_asymptotic"]

CROSSOVER = 10_000

# pi**2 / 2 as an unevaluated sum hi + lo
_HALF_PI_SQ_HI = 4.934802200544679
_HALF_PI_SQ_LO = 3.1326477543698557e-16

_SPLITTER = 134217729.0  # 2**27 + 1


def _split(x):
    c = _SPLITTER * x
    hi = c - (c - x)
    return hi, x - hi


def _two_product(a, b):
    """Error-free product: ``a * b == p + e`` exactly (Dekker)."""
    p = a * b
    a_hi, a_lo = _split(a)
    b_hi, b_lo = _split(b)
    e = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, e


def _odd_reciprocal_squares(n):
    """Return ``(hi, lo)`` arrays with ``hi + lo = 4 / (2k - 1)**2`` to ~2**-106."""
    k = np.arange(n, 0, -1, dtype=np.float64)
    m = (2.0 * k - 1.0) ** 2  # exact below 2**53
    hi = 4.0 / m
    prod, err = _two_product(hi, m)
    lo = ((4.0 - prod) - err) / m
    return hi, lo


def trigamma_half_integer_sum(n):
    """Evaluate ``psi'(n + 1/2)`` through the finite odd-square identity.

    Terms are generated from the largest ``k`` downward and accumulated with
    :func:`math.fsum`, which is exactly rounded, so ordering only matters for
    the low-order residuals.
    """
    n = _check_n(n)
    if n == 0:
        return _HALF_PI_SQ_HI
    hi, lo = _odd_reciprocal_squares(n)
    return math.fsum(np.concatenate(([_HALF_PI_SQ_HI, _HALF_PI_SQ_LO], -hi, -lo)))


def trigamma_asymptotic(n):
    """Three-term asymptotic series of ``psi'(z)`` at ``z = n + 1/2``.

    Truncation error is ``~ 1 / (30 z**5)``; intended for ``n >= CROSSOVER``.
    """
    n = _check_n(n)
    z = n + 0.5
    r = 1.0 / z
    return r * (1.0 + r * (0.5 + r / 6.0))


def trigamma_half_integer(n):
    """Trigamma function at ``n + 1/2`` for integer ``n >= 0``.

    Parameters
    ----------
    n : int
        Non-negative integer; the argument is ``z = n + 1/2``.

    Returns
    -------
    float
        ``psi'(n + 1/2)``, positive and strictly decreasing in ``n``.

    Examples
    --------
    >>> round(trigamma_half_integer(1), 12)
    0.934802200545
    """
    n = _check_n(n)
    if n > CROSSOVER:
        return trigamma_asymptotic(n)
    return trigamma_half_integer_sum(n)


def _check_n(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError(f"n must be an integer, got {n!r}")
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return int(n)
