r"""
Approach to the asymptotes
==========================

The exact worst-case failure rate grows with the register size towards the
trigamma bound, which in turn approaches ``4 / (pi**2 2**p)``.
"""

import math

from qpe_bounds import RegisterSpec, emit_table, worst_case_failure

for row in emit_table(s=12, p_max=14):
    print(f"p={row.p:2d}  exact={row.epsilon_exact:.6e}  trigamma={row.epsilon_trigamma:.6e}  "
          f"2^-p*4/pi^2={row.epsilon_p_infinity:.6e}  "
          f"2^p*trigamma*pi^2/4={row.epsilon_trigamma * 2**row.p * math.pi**2 / 4:.8f}")

# %%
# Convergence in s at fixed p.
p = 4
for s in (1, 2, 4, 8, 16, 24):
    print(f"s={s:2d}  eps={worst_case_failure(RegisterSpec(s, p)).epsilon:.15f}")
