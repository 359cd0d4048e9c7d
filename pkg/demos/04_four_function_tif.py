"""
Four functions: when a TIF set is still distinguishable
=======================================================

For four functions each column of the function matrix is one of four
patterns. The determinant depends only on how often each pattern occurs,
``16 (M + N1) N2 N3 N4``, so a TIF set with all three mixed patterns has
quantum-distinguishable standard oracles.
"""

import random

from oracle_usd import FunctionSet, coincidence_matrix, column_profile, exact_determinant, generate_tif4, tif4_det
from oracle_usd.functions import is_totally_indistinguishable
from oracle_usd.tif import random_tif4_inputs

s = FunctionSet.from_values(3, 2, [[1, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
p = column_profile(s)
print("functions:", s.rows())
print("TIF:", is_totally_indistinguishable(s))
print("profile:", p.as_tuple(), "closed form:", tif4_det(p, 3), "exact:", exact_determinant(coincidence_matrix(s)))

rng = random.Random(1)
for _ in range(5):
    m, n = rng.randint(3, 6), rng.randint(2, 4)
    t = generate_tif4(m, n, *random_tif4_inputs(m, n, rng))
    q = column_profile(t)
    print(f"m={m} n={n} profile={q.as_tuple()} det={exact_determinant(coincidence_matrix(t))} formula={tif4_det(q, m)}")
