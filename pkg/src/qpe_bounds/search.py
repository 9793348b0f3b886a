"""Numerical search for the phase offset that maximizes the failure rate."""

import math
from dataclasses import dataclass

import numpy as np

from ._errors import DomainError
from .bounds import WindowConvention, failure_probability

__all__ = ["SearchResult", "golden_section_max", "maximize_failure",
           "derivative_at_half"]

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
FD_STEP = 1e-5


@dataclass(frozen=True)
class SearchResult:
    a_star: float
    epsilon_star: float
    evaluations: int
    derivative_at_half: float


def golden_section_max(f, lo, hi, tol):
    """Shrink ``[lo, hi]`` around a maximum of ``f`` until narrower than ``tol``.

    Returns the list of ``(x, f(x))`` pairs evaluated, in order.
    """
    probes = []

    def g(x):
        y = f(x)
        probes.append((x, y))
        return y

    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = g(c), g(d)
    while hi - lo > tol:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = g(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = g(d)
    return probes


def derivative_at_half(spec, step=FD_STEP):
    """Central difference of the symmetric-window failure rate at ``a = 1/2``."""
    up = failure_probability(spec, 0.5 + step).epsilon
    down = failure_probability(spec, 0.5 - step).epsilon
    return (up - down) / (2.0 * step)


def maximize_failure(spec, grid_points=1024, tol=1e-9):
    """Locate the worst-case scaled offset for ``spec``.

    A uniform grid over ``[0, 1)`` picks the best cell, which golden-section
    search then refines. The coarse pass keeps the refiner from locking onto
    a ripple between lattice points.

    Parameters
    ----------
    spec : RegisterSpec
    grid_points : int, optional
        Number of uniform samples, at least 16.
    tol : float, optional
        Final bracket width.

    Returns
    -------
    SearchResult
        ``a_star`` is the probed point with the largest failure rate; ties go
        to the smaller ``a``.
    """
    if grid_points < 16:
        raise DomainError(f"grid_points must be >= 16, got {grid_points}")
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")

    def eps(a):
        return failure_probability(spec, a, WindowConvention.SYMMETRIC).epsilon

    grid = np.arange(grid_points) / grid_points
    values = np.array([eps(a) for a in grid])
    best = int(np.argmax(values))  # first occurrence, i.e. smallest a
    lo = grid[best - 1] if best > 0 else 0.0
    hi = grid[best + 1] if best + 1 < grid_points else math.nextafter(1.0, 0.0)
    probes = golden_section_max(eps, lo, hi, tol)

    points = list(zip(grid.tolist(), values.tolist())) + probes
    # deterministic arg-max: highest value, then smallest a
    points.sort(key=lambda item: (-item[1], item[0]))
    a_star, eps_star = points[0]
    return SearchResult(
        a_star=float(a_star),
        epsilon_star=float(eps_star),
        evaluations=len(points) + 2,
        derivative_at_half=derivative_at_half(spec),
    )
