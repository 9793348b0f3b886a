r"""
Checking a simulator against the exact formula
==============================================

Phase estimation on a 2x2 rotation matrix, simulated gate by gate on the
composite register, reproduces the closed-form distribution. Summing the
accepted window gives the failure rate, which matches the formula.
"""

from fractions import Fraction

import numpy as np

from qpe_bounds import (
    RegisterSpec,
    WindowSpec,
    decompose_phase,
    distribution,
    failure_probability,
    rotation_demo,
    window_success_probability,
)

spec = RegisterSpec(s=2, p=2)
n = 2**spec.t
# halfway between outcomes 5 and 6: the worst case
phi = Fraction(2 * 5 + 1, 2 * n)

simulated = rotation_demo(spec, phi)
closed = distribution(spec.t, phi)
print("index  rotation-sim   closed-form")
for k in range(n):
    print(f"{k:5d}  {simulated.probs[k]:.10f}  {closed.probs[k]:.10f}")
print(f"max |diff| = {np.max(np.abs(simulated.probs - closed.probs)):.2e}")

# %%
# Failure rate from the simulated distribution versus the formula.
decomp = decompose_phase(phi, spec.t)
success = window_success_probability(simulated, decomp, WindowSpec.from_register(spec))
print(f"simulated failure: {1 - success:.12f}")
print(f"formula failure:   {failure_probability(spec, decomp.a).epsilon:.12f}")
