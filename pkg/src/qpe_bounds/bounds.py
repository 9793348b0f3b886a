"""Closed-form failure probabilities for phase estimation.

The failure probability for scaled offset ``a`` and window limits ``L`` is

    eps = 1 - sin(pi a)**2 / 4**t * sum_{l in L} csc(pi (a - l) / 2**t)**2

which is the half-angle form of ``1 - cos``; no ``1 - cos`` is ever
subtracted directly. The worst case ``a = 1/2`` is additionally split as

    eps(s, p) = (2 / pi**2) psi'(2**(p-1) + 1/2)
                - 2**(1 - 2t) * sum_l [csc(x_l)**2 - 1 / x_l**2]

with ``x_l = pi (2l - 1) / 2**(t+1)``, so the s-dependence is carried by a
small positive correction computed to full relative precision.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._errors import BudgetExceededError, DomainError
from .special_functions import trigamma_half_integer

__all__ = [
    "MAX_EXACT_P",
    "WindowConvention",
    "RegisterSpec",
    "FailureReport",
    "window_limits",
    "failure_probability",
    "worst_case_failure",
    "asymptotic_failure_t_infinity",
    "asymptotic_failure_p_infinity",
    "p_infinity_inverse_as_printed",
    "p_infinity_exact_inverse",
    "cleve_bound",
    "ib_bound",
]

#: Largest guard-qubit count evaluated term by term (2**25 summands).
MAX_EXACT_P = 26

_CHUNK = 1 << 20


class WindowConvention(str, enum.Enum):
    """Which register outcomes count as a success.

    ``SYMMETRIC`` accepts ``2**p`` outcomes centred on the phase,
    ``ASYMMETRIC`` the conventional ``2**p + 1`` outcomes centred on ``b``.
    """

    SYMMETRIC = "symmetric"
    ASYMMETRIC = "asymmetric"


@dataclass(frozen=True)
class RegisterSpec:
    """Measurement register of ``t = s + p`` qubits.

    Attributes
    ----------
    s : int
        Desired accuracy in bits.
    p : int
        Guard qubits added for reliability.
    """

    s: int
    p: int

    def __post_init__(self):
        for name in ("s", "p"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise DomainError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise DomainError(f"{name} must be >= 1, got {value}")
            object.__setattr__(self, name, int(value))

    @property
    def t(self):
        return self.s + self.p

    @property
    def window_radius(self):
        """Accepted radius ``e = 2**(p-1)`` in outcome indices."""
        return 1 << (self.p - 1)


@dataclass(frozen=True)
class FailureReport:
    """A failure probability together with the arguments that produced it.

    ``method`` is ``"exact"`` for the term-by-term sum and ``"trigamma"``
    when the conservative large-t bound was substituted.
    """

    epsilon: float
    spec: RegisterSpec
    a: float
    convention: WindowConvention
    method: str = "exact"


def window_limits(radius, convention):
    """Inclusive offsets ``(lo, hi)`` accepted around ``b`` for radius ``e``."""
    convention = WindowConvention(convention)
    if convention is WindowConvention.SYMMETRIC:
        return -radius + 1, radius
    return -radius, radius


def _check_budget(spec):
    if spec.p > MAX_EXACT_P:
        raise BudgetExceededError(
            f"p = {spec.p} needs 2**{spec.p - 1} terms; exact evaluation is "
            f"capped at p <= {MAX_EXACT_P}"
        )


def _check_offset(a):
    a = float(a)
    if not (0.0 <= a < 1.0):
        raise DomainError(f"scaled offset a must lie in [0, 1), got {a!r}")
    return a


def failure_probability(spec, a=0.5, convention=WindowConvention.SYMMETRIC):
    """Failure probability at scaled offset ``a`` for a given window convention.

    Parameters
    ----------
    spec : RegisterSpec
    a : float
        Scaled offset ``2**t * delta`` in ``[0, 1)``.
    convention : WindowConvention or str

    Returns
    -------
    FailureReport

    Raises
    ------
    DomainError
        If ``a`` is outside ``[0, 1)``.
    BudgetExceededError
        If ``p`` exceeds :data:`MAX_EXACT_P`.
    """
    convention = WindowConvention(convention)
    a = _check_offset(a)
    _check_budget(spec)
    if a == 0.0:
        # point mass on b, which every window contains
        return FailureReport(0.0, spec, a, convention)

    t = spec.t
    lo, hi = window_limits(spec.window_radius, convention)
    scale = math.ldexp(1.0, t)
    sin_a = math.sin(math.pi * a)
    parts = []
    # smallest terms first; fsum is exactly rounded regardless
    for stop in range(hi, lo - 1, -_CHUNK):
        ell = np.arange(stop, max(stop - _CHUNK, lo - 1), -1, dtype=np.float64)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = sin_a / (scale * np.sin(np.pi * ((a - ell) / scale)))
        # peak term in sinc form stays exact for subnormal a
        ratio[ell == 0.0] = np.sinc(a) / np.sinc(a / scale)
        parts.append(math.fsum(ratio * ratio))
    success = math.fsum(parts)
    epsilon = min(1.0, max(0.0, 1.0 - success))
    return FailureReport(epsilon, spec, a, convention)


def _x_minus_sin(x):
    # Taylor series of x - sin(x); |x| <= pi/4 here, 12 terms reach 2**-60
    x2 = x * x
    term = x * x2 / 6.0
    total = term.copy()
    for k in range(2, 13):
        term = term * (-x2) / ((2 * k) * (2 * k + 1))
        total += term
    return total


def _csc2_excess(x):
    """``csc(x)**2 - 1/x**2`` without cancellation, for ``0 < x <= pi/4``."""
    sin_x = np.sin(x)
    return _x_minus_sin(x) * (x + sin_x) / (x * x * sin_x * sin_x)


def worst_case_failure(spec, *, allow_trigamma=False):
    """Worst-case failure probability ``eps(s, p)``, attained at ``a = 1/2``.

    Parameters
    ----------
    spec : RegisterSpec
    allow_trigamma : bool, optional
        When ``p`` exceeds the exact-sum budget, return the conservative
        ``t -> infinity`` bound instead of raising.

    Returns
    -------
    FailureReport
        Symmetric convention, ``a = 0.5``.
    """
    if spec.p > MAX_EXACT_P and allow_trigamma:
        return FailureReport(asymptotic_failure_t_infinity(spec.p), spec, 0.5,
                             WindowConvention.SYMMETRIC, method="trigamma")
    _check_budget(spec)
    t = spec.t
    n = spec.window_radius
    bound = asymptotic_failure_t_infinity(spec.p)
    parts = []
    for stop in range(n, 0, -_CHUNK):
        ell = np.arange(stop, max(stop - _CHUNK, 0), -1, dtype=np.float64)
        x = np.pi * (2.0 * ell - 1.0) / math.ldexp(1.0, t + 1)
        parts.append(math.fsum(_csc2_excess(x)))
    correction = math.ldexp(math.fsum(parts), 1 - 2 * t)
    return FailureReport(bound - correction, spec, 0.5, WindowConvention.SYMMETRIC)


def asymptotic_failure_t_infinity(p):
    """Large-register bound ``(2 / pi**2) psi'((1 + 2**p) / 2)``.

    Independent of ``s`` and never below :func:`worst_case_failure`.
    """
    p = _check_p(p)
    return 2.0 / math.pi**2 * trigamma_half_integer(1 << (p - 1))


def asymptotic_failure_p_infinity(p):
    """Exponential asymptote ``4 / pi**2 * 2**-p``."""
    p = _check_p(p)
    return math.ldexp(4.0 / math.pi**2, -p)


def _check_p(p):
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)) or p < 1:
        raise DomainError(f"p must be a positive integer, got {p!r}")
    return int(p)


def _check_epsilon(epsilon):
    epsilon = float(epsilon)
    if not (0.0 < epsilon < 1.0):
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    return epsilon


def _ceil_log2(x):
    # one ulp of downward slack so exact powers of two do not round up
    return max(1, math.ceil(math.nextafter(math.log2(x), -math.inf)))


def p_infinity_inverse_as_printed(epsilon):
    """``ceil(log2(2 sqrt(2) / (pi**2 eps)))``, reproduced verbatim.

    This is not the inverse of :func:`asymptotic_failure_p_infinity`; it can
    under-budget by one qubit. See :func:`p_infinity_exact_inverse`.
    """
    epsilon = _check_epsilon(epsilon)
    return _ceil_log2(2.0 * math.sqrt(2.0) / (math.pi**2 * epsilon))


def p_infinity_exact_inverse(epsilon):
    """Smallest ``p`` with ``4 / pi**2 * 2**-p <= eps``, i.e. ``ceil(log2(4 / (pi**2 eps)))``."""
    epsilon = _check_epsilon(epsilon)
    return _ceil_log2(4.0 / (math.pi**2 * epsilon))


def cleve_bound(epsilon):
    """Guard qubits from the Cleve-Ekert-Macchiavello-Mosca bound."""
    epsilon = _check_epsilon(epsilon)
    return _ceil_log2(1.0 / (2.0 * epsilon) + 0.5)


def ib_bound(epsilon):
    """Guard qubits from ``ceil(log2(1/(2 eps) + 2) + log2(pi))``."""
    epsilon = _check_epsilon(epsilon)
    return _ceil_log2((1.0 / (2.0 * epsilon) + 2.0) * math.pi)
