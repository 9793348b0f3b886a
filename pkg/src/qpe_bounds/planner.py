"""Guard-qubit planning: invert the failure formulas into qubit counts."""

import enum
import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from ._errors import BudgetExceededError, DomainError, UnreachableTargetError
from .bounds import (
    MAX_EXACT_P,
    RegisterSpec,
    asymptotic_failure_p_infinity,
    asymptotic_failure_t_infinity,
    cleve_bound,
    ib_bound,
    p_infinity_exact_inverse,
    p_infinity_inverse_as_printed,
    worst_case_failure,
)

__all__ = [
    "MAX_P",
    "Method",
    "TrigammaFallbackWarning",
    "BoundComparison",
    "TableRow",
    "min_guard_qubits",
    "compare_bounds",
    "emit_table",
]

MAX_P = 64


class Method(str, enum.Enum):
    EXACT = "exact"
    TRIGAMMA = "trigamma"


class TrigammaFallbackWarning(UserWarning):
    """The exact scan hit the term budget and continued on the trigamma bound."""


@dataclass(frozen=True)
class BoundComparison:
    epsilon_target: float
    s: int
    p_exact: int
    p_trigamma: int
    p_cleve: int
    p_ib: int
    p_inf_printed: int
    p_inf_exact_inverse: int


class TableRow(NamedTuple):
    p: int
    epsilon_exact: float
    epsilon_trigamma: float
    epsilon_p_infinity: float


def _check_target(epsilon_target):
    epsilon_target = float(epsilon_target)
    if not (0.0 < epsilon_target < 1.0):
        raise DomainError(f"epsilon_target must lie in (0, 1), got {epsilon_target!r}")
    return epsilon_target


def min_guard_qubits(s, epsilon_target, method=Method.EXACT):
    """Smallest ``p >= 1`` whose worst-case failure rate is at most the target.

    The scan is linear in ``p`` and checks at each step that the failure rate
    strictly decreased. With ``method="exact"`` the scan uses
    :func:`~qpe_bounds.bounds.worst_case_failure`; once ``p`` passes the
    exact-sum budget it continues on the conservative trigamma bound and
    emits :class:`TrigammaFallbackWarning`. ``method="trigamma"`` ignores
    ``s`` and uses the large-register bound throughout.

    Raises
    ------
    DomainError
        For a target outside ``(0, 1)``.
    UnreachableTargetError
        If no ``p <= 64`` suffices.
    """
    epsilon_target = _check_target(epsilon_target)
    method = Method(method)
    RegisterSpec(s, 1)  # validates s

    previous = math.inf
    fell_back = False
    for p in range(1, MAX_P + 1):
        if method is Method.TRIGAMMA or p > MAX_EXACT_P:
            if method is Method.EXACT and not fell_back:
                fell_back = True
                warnings.warn(
                    f"exact sum budget exceeded at p={p}; continuing with the "
                    "trigamma upper bound",
                    TrigammaFallbackWarning,
                    stacklevel=2,
                )
            current = asymptotic_failure_t_infinity(p)
        else:
            current = worst_case_failure(RegisterSpec(s, p)).epsilon
        if not current < previous:
            raise ArithmeticError(
                f"failure rate not decreasing in p at s={s}, p={p}: "
                f"{previous!r} -> {current!r}"
            )
        if current <= epsilon_target:
            return p
        previous = current
    raise UnreachableTargetError(
        f"no p <= {MAX_P} reaches epsilon_target={epsilon_target!r}"
    )


def compare_bounds(s, epsilon_target):
    """Guard-qubit counts from every available formula for one target."""
    epsilon_target = _check_target(epsilon_target)
    return BoundComparison(
        epsilon_target=epsilon_target,
        s=int(s),
        p_exact=min_guard_qubits(s, epsilon_target, Method.EXACT),
        p_trigamma=min_guard_qubits(s, epsilon_target, Method.TRIGAMMA),
        p_cleve=cleve_bound(epsilon_target),
        p_ib=ib_bound(epsilon_target),
        p_inf_printed=p_infinity_inverse_as_printed(epsilon_target),
        p_inf_exact_inverse=p_infinity_exact_inverse(epsilon_target),
    )


def emit_table(s, p_max):
    """Exact, trigamma and exponential failure rates for ``p = 1 .. p_max``.

    Raises :class:`~qpe_bounds.BudgetExceededError` when ``p_max`` is beyond
    the exact-sum budget.
    """
    if p_max > MAX_EXACT_P:
        raise BudgetExceededError(
            f"p_max = {p_max} exceeds the exact-sum budget p <= {MAX_EXACT_P}"
        )
    if p_max < 1:
        raise DomainError(f"p_max must be >= 1, got {p_max}")
    rows = []
    for p in range(1, p_max + 1):
        rows.append(TableRow(
            p=p,
            epsilon_exact=worst_case_failure(RegisterSpec(s, p)).epsilon,
            epsilon_trigamma=asymptotic_failure_t_infinity(p),
            epsilon_p_infinity=asymptotic_failure_p_infinity(p),
        ))
    return rows
