"""Exact and asymptotic failure probabilities for quantum phase estimation.

Subpackages
-----------
special_functions
    Trigamma at half-integer arguments.
bounds
    Closed-form failure rates and the older approximate qubit formulas.
qpe_sim
    Statevector oracle: stage-1 state, radix-2 inverse transform, rotation demo.
search
    Grid plus golden-section maximization over the phase offset.
planner
    Minimal guard-qubit counts and bound comparison tables.
cli
    ``qpe-bounds`` command-line interface.
"""

from ._errors import (
    BudgetExceededError,
    DomainError,
    QPEBoundsError,
    UnreachableTargetError,
)
from .bounds import (
    FailureReport,
    RegisterSpec,
    WindowConvention,
    asymptotic_failure_p_infinity,
    asymptotic_failure_t_infinity,
    cleve_bound,
    failure_probability,
    ib_bound,
    p_infinity_exact_inverse,
    p_infinity_inverse_as_printed,
    worst_case_failure,
)
from .planner import BoundComparison, compare_bounds, emit_table, min_guard_qubits
from .qpe_sim import (
    MeasurementDistribution,
    PhaseDecomposition,
    StateVector,
    WindowSpec,
    amplitude_closed_form,
    decompose_phase,
    distribution,
    inverse_qft,
    qft,
    rotation_demo,
    stage1_state,
    transform_distribution,
    window_success_probability,
)
from .search import SearchResult, maximize_failure
from .special_functions import trigamma_half_integer

__version__ = "0.1.0"
