"""Brute-force statevector simulation of phase estimation.

Three independent routes to the measurement distribution are provided:

* :func:`distribution` evaluates the geometric-sum amplitude in closed form;
* ``inverse_qft(stage1_state(t, phi))`` builds the kicked-back register state
  and runs a radix-2 transform;
* :func:`rotation_demo` simulates controlled powers of a 2x2 rotation acting
  on its eigenvector and traces the target out.

Phases are handled as :class:`fractions.Fraction` so that dyadic phases
(``delta = 0``) and midpoints (``a = 1/2``) are hit exactly.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._errors import BudgetExceededError, DomainError
from .bounds import RegisterSpec, WindowConvention, window_limits

__all__ = [
    "MAX_CLOSED_FORM_T",
    "MAX_TRANSFORM_T",
    "PhaseDecomposition",
    "StateVector",
    "MeasurementDistribution",
    "WindowSpec",
    "parse_phase",
    "decompose_phase",
    "stage1_state",
    "qft",
    "inverse_qft",
    "amplitude_closed_form",
    "distribution",
    "transform_distribution",
    "window_success_probability",
    "rotation_matrix",
    "rotation_eigenvector",
    "rotation_demo",
]

MAX_CLOSED_FORM_T = 26
MAX_TRANSFORM_T = 20


@dataclass(frozen=True)
class PhaseDecomposition:
    """``phi = (b + a) / 2**t`` with integer ``b`` and ``0 <= a < 1``."""

    phi: Fraction
    t: int
    b: int
    delta: float
    a: float


@dataclass
class StateVector:
    t: int
    amplitudes: np.ndarray

    @property
    def norm(self):
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))


@dataclass
class MeasurementDistribution:
    t: int
    probs: np.ndarray

    def __len__(self):
        return len(self.probs)


@dataclass(frozen=True)
class WindowSpec:
    """Acceptance radius ``e`` (in outcome indices) and convention."""

    e: int
    convention: WindowConvention = WindowConvention.SYMMETRIC

    def __post_init__(self):
        if self.e < 1:
            raise DomainError(f"window radius must be >= 1, got {self.e}")
        object.__setattr__(self, "convention", WindowConvention(self.convention))

    @classmethod
    def from_register(cls, spec, convention=WindowConvention.SYMMETRIC):
        return cls(spec.window_radius, convention)


def parse_phase(phi):
    """Convert ``phi`` to an exact :class:`~fractions.Fraction` in ``[0, 1)``.

    Accepts ``Fraction``, ``int``, ``float`` (converted exactly), or a string
    such as ``"3/8"`` or ``"0.3"``.
    """
    if isinstance(phi, Fraction):
        value = phi
    elif isinstance(phi, str):
        try:
            value = Fraction(phi.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot parse phase {phi!r}") from exc
    elif isinstance(phi, (int, float, np.integer, np.floating)) and not isinstance(phi, bool):
        if not math.isfinite(phi):
            raise DomainError(f"phase must be finite, got {phi!r}")
        value = Fraction(phi)
    else:
        raise DomainError(f"unsupported phase type {type(phi).__name__}")
    if not (0 <= value < 1):
        raise DomainError(f"phase must lie in [0, 1), got {phi!r}")
    return value


def _check_t(t, cap):
    if isinstance(t, bool) or not isinstance(t, (int, np.integer)) or t < 1:
        raise DomainError(f"t must be a positive integer, got {t!r}")
    if t > cap:
        raise BudgetExceededError(f"t = {t} exceeds the simulation cap of {cap}")
    return int(t)


def decompose_phase(phi, t):
    """Split ``phi`` into its best lower ``t``-bit approximation and offset.

    Examples
    --------
    >>> d = decompose_phase("0.3", 3)
    >>> d.b, d.a
    (2, 0.4)
    """
    if isinstance(t, bool) or not isinstance(t, (int, np.integer)) or t < 1:
        raise DomainError(f"t must be a positive integer, got {t!r}")
    phi = parse_phase(phi)
    scaled = phi * (1 << t)
    b = math.floor(scaled)
    offset = scaled - b
    return PhaseDecomposition(phi=phi, t=int(t), b=int(b),
                              delta=float(offset / (1 << t)), a=float(offset))


def _turns_to_phase(turns):
    # reduce to [-1/2, 1/2) before scaling by 2 pi
    turns = turns - np.floor(turns + 0.5)
    return np.exp(2j * np.pi * turns)


def stage1_state(t, phi):
    """Register state after phase kickback, ``2**(-t/2) sum_k e^{2 pi i phi k} |k>``."""
    t = _check_t(t, MAX_CLOSED_FORM_T)
    d = decompose_phase(phi, t)
    n = 1 << t
    k = np.arange(n, dtype=np.int64)
    # phi k = (b k mod 2**t) / 2**t + a k / 2**t, both parts exact or nearly so
    turns = ((d.b * k) % n).astype(np.float64) / n + d.a * (k / n)
    return StateVector(t, _turns_to_phase(turns) / math.sqrt(n))


def _radix2(x, sign):
    """Unitary DFT ``N**-1/2 sum_k e^{sign 2 pi i jk/N} x_k`` by iterative radix 2."""
    n = x.shape[0]
    # X holds, for each stage, length-`rows` transforms of the decimated inputs
    X = x.reshape(1, n).astype(np.complex128)
    while X.shape[0] < n:
        rows, half = X.shape[0], X.shape[1] // 2
        even, odd = X[:, :half], X[:, half:]
        twiddle = np.exp(sign * 1j * np.pi * np.arange(rows) / rows)[:, None]
        X = np.vstack([even + twiddle * odd, even - twiddle * odd])
    return X.ravel() / math.sqrt(n)


def _dft_matrix(n, sign):
    j = np.arange(n)
    turns = np.outer(j, j) % n / n
    return np.exp(sign * 2j * np.pi * turns) / math.sqrt(n)


def _transform(state, sign, method):
    amps = np.asarray(state.amplitudes, dtype=np.complex128)
    n = 1 << state.t
    if amps.shape[0] != n:
        raise DomainError(f"expected {n} amplitudes, got {amps.shape[0]}")
    if method == "radix2":
        _check_t(state.t, MAX_TRANSFORM_T)
        out = _radix2(amps, sign)
    elif method == "matrix":
        _check_t(state.t, 12)
        out = _dft_matrix(n, sign) @ amps
    else:
        raise DomainError(f"unknown transform method {method!r}")
    return StateVector(state.t, out)


def inverse_qft(state, method="radix2"):
    """Apply ``F^dagger``: ``out_j = 2**(-t/2) sum_k e^{-2 pi i jk / 2**t} in_k``.

    ``method="matrix"`` applies the dense unitary instead (t <= 12).
    """
    return _transform(state, -1, method)


def qft(state, method="radix2"):
    """Forward transform, the inverse of :func:`inverse_qft`."""
    return _transform(state, +1, method)


def amplitude_closed_form(decomp, ell):
    """Amplitude ``x_{b+ell}`` of the transformed register.

    Uses ``1 - e^{i theta} = -2i sin(theta/2) e^{i theta/2}`` in numerator
    and denominator; ``ell`` is taken modulo ``2**t``.
    """
    t = decomp.t
    n = 1 << t
    ell = int(ell)
    if decomp.a == 0.0:
        return complex(1.0) if ell % n == 0 else complex(0.0)
    a = decomp.a
    half = math.pi * (a - ell) / n
    if ell % n == 0:
        ratio = float(np.sinc(a) / np.sinc(a / n))
    else:
        ratio = math.sin(math.pi * a) / (n * math.sin(half))
    return ratio * complex(math.cos(math.pi * a - half), math.sin(math.pi * a - half))


def distribution(t, phi):
    """Outcome probabilities ``|x_k|**2`` for all ``2**t`` indices, in closed form."""
    t = _check_t(t, MAX_CLOSED_FORM_T)
    d = decompose_phase(phi, t)
    n = 1 << t
    if d.a == 0.0:
        probs = np.zeros(n)
        probs[d.b] = 1.0
        return MeasurementDistribution(t, probs)
    k = np.arange(n, dtype=np.int64)
    # signed offset from b in (-n/2, n/2]
    ell = (k - d.b) % n
    ell = np.where(ell > n // 2, ell - n, ell).astype(np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = math.sin(math.pi * d.a) / (n * np.sin(np.pi * ((d.a - ell) / n)))
    # peak term in sinc form stays exact for subnormal a
    ratio[d.b] = np.sinc(d.a) / np.sinc(d.a / n)
    return MeasurementDistribution(t, ratio * ratio)


def transform_distribution(t, phi, method="radix2"):
    """Outcome probabilities via ``inverse_qft(stage1_state(t, phi))``."""
    out = inverse_qft(stage1_state(t, phi), method=method)
    return MeasurementDistribution(out.t, np.abs(out.amplitudes) ** 2)


def window_success_probability(dist, decomp, window):
    """Probability mass on outcomes ``(b + ell) mod 2**t`` accepted by ``window``."""
    if dist.t != decomp.t:
        raise DomainError(f"distribution has t={dist.t}, decomposition t={decomp.t}")
    n = 1 << dist.t
    lo, hi = window_limits(window.e, window.convention)
    if hi - lo + 1 >= n:
        return float(min(1.0, math.fsum(dist.probs)))
    idx = (decomp.b + np.arange(lo, hi + 1)) % n
    return float(min(1.0, math.fsum(dist.probs[idx])))


def rotation_matrix(phi):
    """Counter-clockwise rotation by ``2 pi phi``."""
    theta = 2.0 * math.pi * float(phi)
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def rotation_eigenvector():
    """Eigenvector ``(1, -i)/sqrt(2)`` with eigenvalue ``e^{+2 pi i phi}``."""
    return np.array([1.0, -1.0j]) / math.sqrt(2.0)


def rotation_demo(spec, phi):
    """Run phase estimation on a 2x2 rotation and return the register distribution.

    The ``(t+1)``-qubit composite is simulated directly: Hadamards on the
    register, controlled ``U**(2**j)`` from register qubit ``j`` onto the
    target, the inverse transform on the register, then the target is traced
    out. Nothing here reuses :func:`stage1_state`.
    """
    if not isinstance(spec, RegisterSpec):
        raise DomainError("spec must be a RegisterSpec")
    t = _check_t(spec.t, MAX_TRANSFORM_T)
    phi = parse_phase(phi)
    n = 1 << t
    u = rotation_eigenvector()
    # composite amplitudes indexed [register, target]
    state = np.empty((n, 2), dtype=np.complex128)
    state[:] = u / math.sqrt(n)
    k = np.arange(n)
    power = rotation_matrix(phi)
    for j in range(t):
        on = ((k >> j) & 1).astype(bool)
        state[on] = state[on] @ power.T
        power = power @ power
    probs = np.zeros(n)
    for column in range(2):
        reg = inverse_qft(StateVector(t, state[:, column]))
        probs += np.abs(reg.amplitudes) ** 2
    return MeasurementDistribution(t, probs)
