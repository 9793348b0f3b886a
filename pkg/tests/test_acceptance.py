"""Exit criteria, one test per criterion, each at its stated tolerance."""

import math
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from conftest import ACCEPTANCE
from qpe_bounds import (
    RegisterSpec,
    WindowConvention,
    WindowSpec,
    asymptotic_failure_t_infinity,
    compare_bounds,
    decompose_phase,
    distribution,
    failure_probability,
    maximize_failure,
    rotation_demo,
    transform_distribution,
    window_success_probability,
    worst_case_failure,
)


@contextmanager
def criterion(number, title):
    detail = {"text": ""}
    try:
        yield detail
    except BaseException:
        ACCEPTANCE[number] = ("FAIL", f"{title} {detail['text']}")
        raise
    ACCEPTANCE[number] = ("PASS", f"{title} {detail['text']}")


def test_1_six_decimal_reproduction():
    with criterion(1, "search maximum vs worst-case formula, (s,p) in 1..6") as info:
        start = time.perf_counter()
        worst_eps = worst_a = 0.0
        for s in range(1, 7):
            for p in range(1, 7):
                spec = RegisterSpec(s, p)
                result = maximize_failure(spec)
                worst_eps = max(worst_eps, abs(result.epsilon_star - worst_case_failure(spec).epsilon))
                worst_a = max(worst_a, abs(result.a_star - 0.5))
        elapsed = time.perf_counter() - start
        info["text"] = f"max|d eps|={worst_eps:.2e} max|a*-1/2|={worst_a:.2e} time={elapsed:.1f}s"
        assert worst_eps <= 1e-6
        assert worst_a <= 1e-6
        assert elapsed < 60


def test_2_oracle_equivalence():
    with criterion(2, "closed form vs statevector oracle, s+p<=16, 64 offsets, both windows") as info:
        start = time.perf_counter()
        worst = 0.0
        for s in range(1, 16):
            for p in range(1, 17 - s):
                spec = RegisterSpec(s, p)
                n = 2**spec.t
                for j in range(64):
                    a = Fraction(j, 64)
                    # b = n - 1 exercises the wrap-around of the window
                    b = n - 1 if j % 2 == 0 else (7 * j) % n
                    phi = (b + a) / n
                    dist = transform_distribution(spec.t, phi)
                    decomp = decompose_phase(phi, spec.t)
                    assert decomp.a == float(a)
                    for convention in WindowConvention:
                        window = WindowSpec.from_register(spec, convention)
                        oracle = 1.0 - window_success_probability(dist, decomp, window)
                        formula = failure_probability(spec, float(a), convention).epsilon
                        worst = max(worst, abs(formula - oracle))
        elapsed = time.perf_counter() - start
        info["text"] = f"max abs diff={worst:.2e} time={elapsed:.1f}s"
        assert worst <= 1e-12
        assert elapsed < 300


def test_3_asymptote_constant():
    with criterion(3, "2^p * trigamma bound -> 4/pi^2, p in 8..20") as info:
        target = 4 / math.pi**2
        devs = [abs(2**p * asymptotic_failure_t_infinity(p) - target) / target for p in range(8, 21)]
        info["text"] = f"max rel dev={max(devs):.2e} (p=8: {devs[0]:.2e})"
        assert max(devs) <= 1e-2


def test_4_qubit_saving():
    with criterion(4, "compare_bounds at s=10") as info:
        first = compare_bounds(10, 0.1)
        second = compare_bounds(10, 0.01)
        info["text"] = (f"eps=0.1: exact={first.p_exact} cleve={first.p_cleve}; "
                        f"eps=0.01: exact={second.p_exact} cleve={second.p_cleve} "
                        f"printed-inverse={second.p_inf_printed}")
        assert first.p_exact == 2 and first.p_cleve == 3
        assert first.p_exact < first.p_cleve
        assert second.p_exact == second.p_cleve == 6
        assert second.p_inf_printed == 5


def test_5_bound_ordering():
    with criterion(5, "orderings over s<=20, p<=10 and symmetric >= asymmetric") as info:
        checks = 0
        for p in range(1, 11):
            bound = asymptotic_failure_t_infinity(p)
            for s in range(1, 21):
                here = worst_case_failure(RegisterSpec(s, p)).epsilon
                up_s = worst_case_failure(RegisterSpec(s + 1, p)).epsilon
                up_p = worst_case_failure(RegisterSpec(s, p + 1)).epsilon
                assert here < up_s < bound, (s, p)
                assert up_p < here, (s, p)
                checks += 3
        for s in range(1, 9):
            for p in range(1, 9):
                spec = RegisterSpec(s, p)
                for j in range(64):
                    sym = failure_probability(spec, j / 64, "symmetric").epsilon
                    asym = failure_probability(spec, j / 64, "asymmetric").epsilon
                    assert sym >= asym, (s, p, j)
                    checks += 1
        info["text"] = f"{checks} inequalities"


def test_6_path_equivalence():
    with criterion(6, "closed form / transform / rotation demo, t<=12, 32 phases") as info:
        rng = np.random.default_rng(6)
        worst_diff = worst_norm = 0.0
        for t in range(1, 13):
            for phi in rng.random(32):
                closed = distribution(t, phi).probs
                paths = [closed, transform_distribution(t, phi).probs]
                if t >= 2:
                    paths.append(rotation_demo(RegisterSpec(1, t - 1), phi).probs)
                for probs in paths:
                    worst_diff = max(worst_diff, float(np.max(np.abs(probs - closed))))
                    worst_norm = max(worst_norm, abs(math.fsum(probs) - 1.0))
        info["text"] = f"max elementwise diff={worst_diff:.2e} max norm err={worst_norm:.2e}"
        assert worst_diff <= 1e-10
        assert worst_norm <= 1e-12


def test_7_stationarity():
    with criterion(7, "finite-difference slope at a=1/2, (s,p) in 1..8") as info:
        worst = 0.0
        for s in range(1, 9):
            for p in range(1, 9):
                result = maximize_failure(RegisterSpec(s, p), grid_points=16, tol=1e-3)
                worst = max(worst, abs(result.derivative_at_half) / result.epsilon_star)
        info["text"] = f"max |d eps/da| / eps={worst:.2e}"
        assert worst <= 1e-6


def test_8_specific_values():
    with criterion(8, "eps(1,1) and eps(2,2)") as info:
        e11 = failure_probability(RegisterSpec(1, 1), 0.5).epsilon
        e22 = failure_probability(RegisterSpec(2, 2), 0.5).epsilon
        info["text"] = f"eps(1,1)={e11:.15f} eps(2,2)={e22:.9f}"
        assert abs(e11 - (2 - math.sqrt(2)) / 4) <= 1e-12
        assert abs(e22 - 0.094108) <= 1e-6
        assert abs(worst_case_failure(RegisterSpec(1, 1)).epsilon - e11) <= 1e-14
