"""
Grover oracles, sign and phase versions
=======================================

The M single-item marking functions give ``Gamma = 2I + (M-2)J``. Its
determinant has a closed form, and so does the Gram of the phase oracles
that multiply the marked item by ``exp(i theta)``.
"""

import math

from oracle_usd import coincidence_matrix, exact_determinant, grover_gamma_closed_form, grover_set
from oracle_usd.gram import grover_phase_gram_det, spectrum
from oracle_usd.operators import grover_phase_gram_det_numeric

for m in range(2, 9):
    det = exact_determinant(coincidence_matrix(grover_set(m)))
    print(f"M={m:2d}  det={det:>8d}  closed form={grover_gamma_closed_form(m).determinant:>8d}")

print("spectrum for M=5:", spectrum(coincidence_matrix(grover_set(5))).eigenvalues)

print()
# at M=2, theta=pi the two oracles are negatives of each other
print(" M  theta    formula            numeric")
for m in (2, 3, 4):
    for theta in (0.1, math.pi / 2, math.pi, 2.7, 2 * math.pi):
        f = grover_phase_gram_det(m, theta)
        n = grover_phase_gram_det_numeric(m, theta)
        print(f"{m:2d}  {theta:6.3f}  {f:16.10g}  {n:16.10g}")

