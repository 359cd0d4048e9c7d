"""
All four one-bit functions cannot be told apart
================================================

The standard oracles of the four functions on one bit are linearly
dependent. The coincidence matrix shows it; the explicit 4x4 permutation
matrices confirm it.
"""

import numpy as np

from oracle_usd import all_functions_set, coincidence_matrix, exact_determinant
from oracle_usd import operators as ops

s = all_functions_set(2, 2)
print("functions:", s.rows())

gamma = coincidence_matrix(s)
print("Gamma =")
print(gamma.entries)
print("det(Gamma) =", exact_determinant(gamma))

# the Gram of the operators themselves is N * Gamma
mats = ops.standard_oracles(s)
print("Tr(U^+ U) / N equals Gamma:", np.array_equal(ops.gram_trace(mats) // 2, gamma.entries))

# explicit dependency: U_00 + U_11 = U_01 + U_10
print("U_00 + U_11 - U_01 - U_10 == 0:", not np.any(mats[0] + mats[3] - mats[1] - mats[2]))

# any three of them are fine
print("first three independent:", ops.brute_force_linear_independence(mats[:3]))
