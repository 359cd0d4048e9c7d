"""
More calls help
===============

Using the oracle C times in parallel replaces Gamma by its entrywise C-th
power. Off-diagonal entries shrink relative to the diagonal, so enough calls
make the matrix diagonally dominant and hence non-singular.
"""

from oracle_usd import all_functions_set, distinguishable_with_calls, minimal_calls_search
from oracle_usd.multicall import delta_min, sufficient_calls_bound

for m, n in ((2, 2), (2, 3), (3, 2)):
    s = all_functions_set(m, n)
    print(f"F_{m}{n}: K={s.k}, delta_min={delta_min(s)}, sufficient bound={sufficient_calls_bound(s)}")
    for c in (1, 2, 3):
        rep = distinguishable_with_calls(s, c)
        print(f"  c={c}: det={rep.hadamard_det}  dominant={rep.strictly_dominant}")
    print("  minimal calls:", minimal_calls_search(s, 4))

# two calls on F_22, checked on the explicit 16x16 tensor products
print(distinguishable_with_calls(all_functions_set(2, 2), 2, brute_force=True))
