"""
An ancilla does not help commuting oracles
==========================================

For a commuting family, the output Gram of an entangled probe can be matched
by a product probe whose system part carries the marginal weights of the
entangled one in the common eigenbasis.
"""

import numpy as np

from oracle_usd import all_functions_set
from oracle_usd import operators as ops

rng = np.random.default_rng(0)
phases, basis = ops.oracle_phases(all_functions_set(2, 2))
d = phases.shape[1]
probe = ops.ProbeState.from_unnormalized((d, d), rng.normal(size=d * d) + 1j * rng.normal(size=d * d))
ent, prod = ops.product_probe_reduction(phases, probe, basis)
print("entangled-probe Gram:")
print(np.round(ent, 4))
print("max difference from product-probe Gram:", np.max(np.abs(ent - prod)))
