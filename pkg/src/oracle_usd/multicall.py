"""Distinguishability with C parallel oracle calls.

The Gram matrix of ``U_j^{(x)C}`` is ``N^C`` times the entrywise C-th power
of the coincidence matrix, so everything reduces to exact integer
determinants of Hadamard powers.  Strict column diagonal dominance gives a
cheap sufficient test and, through ``delta_min``, a closed-form call count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .functions import FunctionSet
from .gram import CoincidenceMatrix, coincidence_matrix, exact_determinant
from .operators import brute_force_linear_independence, standard_oracle_matrix, tensor_power

TENSOR_MAX_DIM = 36


def hadamard_power(gamma, c: int) -> list[list[int]]:
    if c < 1:
        raise ValueError(f"call count must be >= 1, got {c}")
    rows = gamma.tolist() if isinstance(gamma, CoincidenceMatrix) else [list(r) for r in gamma]
    return [[int(v) ** c for v in row] for row in rows]


def is_strictly_diagonally_dominant(mat) -> bool:
    rows = [[int(v) for v in r] for r in (mat.tolist() if hasattr(mat, "tolist") else mat)]
    k = len(rows)
    if any(len(r) != k for r in rows):
        raise ValueError("diagonal dominance needs a square matrix")
    for j in range(k):
        off = sum(abs(rows[i][j]) for i in range(k) if i != j)
        if abs(rows[j][j]) <= off:
            return False
    return True


def delta_min(s: FunctionSet) -> int:
    """Fewest inputs on which some pair of members differ."""
    if s.k < 2:
        raise ValueError("delta_min needs at least two functions")
    gamma = coincidence_matrix(s).entries
    best = max(int(gamma[a, b]) for a in range(s.k) for b in range(s.k) if a != b)
    return s.m - best


def sufficient_calls_bound(s: FunctionSet) -> int:
    """Least C with ``M^C > (K-1)(M - delta_min)^C``.

    This is the integer form of ``C > ln(K-1) / (ln M - ln(M - delta_min))``;
    with ``delta_min == M`` the right side vanishes and the answer is 1.
    """
    d = delta_min(s)
    m, k = s.m, s.k
    c = 1
    while not m**c > (k - 1) * (m - d) ** c:
        c += 1
    return c


def tensor_oracles(s: FunctionSet, c: int):
    return [tensor_power(standard_oracle_matrix(f), c) for f in s]


def tensor_consistency(s: FunctionSet, c: int, max_dim: int = TENSOR_MAX_DIM) -> bool | None:
    """Exact rank of the C-fold tensor oracles, or ``None`` above ``max_dim``."""
    if (s.m * s.n) ** c > max_dim:
        return None
    return brute_force_linear_independence(tensor_oracles(s, c))


@dataclass(frozen=True)
class MultiCallReport:
    c: int
    hadamard_det: int
    distinguishable: bool
    strictly_dominant: bool
    delta_min: int
    sufficient_bound: int
    brute_force: bool | None = None

    def __post_init__(self):
        if self.strictly_dominant and not self.distinguishable:
            raise AssertionError("strictly dominant Hadamard power with zero determinant")
        if (self.hadamard_det > 0) != self.distinguishable:
            raise AssertionError("determinant sign disagrees with verdict")
        if self.brute_force is not None and self.brute_force != self.distinguishable:
            raise AssertionError("tensor-operator rank disagrees with Hadamard determinant")

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "det": str(self.hadamard_det),
            "distinguishable": self.distinguishable,
            "dominant": self.strictly_dominant,
            "delta_min": self.delta_min,
            "sufficient_bound": self.sufficient_bound,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "MultiCallReport":
        return cls(
            c=doc["c"],
            hadamard_det=int(doc["det"]),
            distinguishable=doc["distinguishable"],
            strictly_dominant=doc["dominant"],
            delta_min=doc["delta_min"],
            sufficient_bound=doc["sufficient_bound"],
        )


def distinguishable_with_calls(s: FunctionSet, c: int, brute_force: bool = False) -> MultiCallReport:
    powered = hadamard_power(coincidence_matrix(s), c)
    det = exact_determinant(powered)
    bf = tensor_consistency(s, c) if brute_force else None
    return MultiCallReport(
        c=c,
        hadamard_det=det,
        distinguishable=det > 0,
        strictly_dominant=is_strictly_diagonally_dominant(powered),
        delta_min=delta_min(s) if s.k >= 2 else s.m,
        sufficient_bound=sufficient_calls_bound(s) if s.k >= 2 else 1,
        brute_force=bf,
    )


class CallSearch(NamedTuple):
    calls: int | None
    reason: str | None = None


def minimal_calls_search(s: FunctionSet, c_max: int) -> CallSearch:
    """Smallest ``c <= c_max`` with a positive Hadamard-power determinant."""
    if c_max < 1:
        raise ValueError(f"c_max must be >= 1, got {c_max}")
    gamma = coincidence_matrix(s)
    blocked_by_dimension = True
    for c in range(1, c_max + 1):
        if s.k > (s.m * s.n) ** c:
            continue
        blocked_by_dimension = False
        if exact_determinant(hadamard_power(gamma, c)) > 0:
            return CallSearch(c)
    return CallSearch(None, "dimension bound" if blocked_by_dimension else "not found")


def monotonicity_findings(s: FunctionSet, c_max: int) -> list[int]:
    """Call counts ``c`` where ``det > 0`` at ``c`` but not at ``c + 1``."""
    gamma = coincidence_matrix(s)
    dets = [exact_determinant(hadamard_power(gamma, c)) for c in range(1, c_max + 2)]
    return [c for c in range(1, c_max + 1) if dets[c - 1] > 0 and dets[c] <= 0]
