r"""
Guard-qubit budgets
===================

Minimal guard qubits for a range of reliability targets, set against the
older approximate formulas. The exact count is never larger than the
Cleve et al. count and is sometimes one qubit smaller.
"""

from qpe_bounds import compare_bounds

s = 10
targets = [0.5, 0.25, 0.1, 0.05, 0.01, 1e-3, 1e-4, 1e-5, 1e-6]
header = ("eps", "exact", "trigamma", "cleve", "ib", "inf(printed)", "inf(exact)")
print("  ".join(f"{h:>12}" for h in header))
for eps in targets:
    row = compare_bounds(s, eps)
    cells = (f"{eps:g}", row.p_exact, row.p_trigamma, row.p_cleve, row.p_ib,
             row.p_inf_printed, row.p_inf_exact_inverse)
    print("  ".join(f"{c:>12}" for c in cells))

# %%
# Where the printed large-p inverse undershoots, the exact count says so.
for eps in targets:
    row = compare_bounds(s, eps)
    if row.p_inf_printed < row.p_exact:
        print(f"eps={eps:g}: printed inverse gives {row.p_inf_printed}, exact needs {row.p_exact}")
