"""
Standard versus minimal oracles
===============================

For one bit a fixed pair of unitaries turns the entanglement-assisted minimal
oracle into the standard one. For three symbols that cannot work, because
some minimal oracles fail to commute while the shifted standard ones do.
Probing with half of a maximally entangled state, both families still give
the same Gram matrix.
"""

import itertools

import numpy as np

from oracle_usd import FunctionSet, coincidence_matrix
from oracle_usd import operators as ops
from oracle_usd.functions import all_permutations

s_mat, t_mat = ops.bilateral_transform_m2()
for f in all_permutations(2):
    err = np.max(np.abs(s_mat @ ops.entanglement_assisted_minimal(f) @ t_mat - ops.standard_oracle_matrix(f)))
    print(f"f={f.values}: |S Qbar T - U| = {err:.1e}")

f, fp = ops.commutator_obstruction(3)
print("non-commuting pair for M=3:", f.values, fp.values)

worst = 0.0
for m in (2, 3):
    perms = all_permutations(m)
    for k in range(1, len(perms) + 1):
        for combo in itertools.combinations(perms, k):
            sub = FunctionSet(m, m, combo)
            gu, gq = ops.choi_state_gram(sub)
            worst = max(worst, np.max(np.abs(gu - gq)), np.max(np.abs(gu - coincidence_matrix(sub).entries / m)))
print(f"Choi-state Grams vs Gamma/M, worst deviation {worst:.1e}")
