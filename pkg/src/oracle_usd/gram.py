"""Coincidence matrices and the determinant test for oracle operators.

For a set of functions ``f_0 .. f_{K-1}`` the coincidence matrix has entry
``(j', j)`` equal to the number of inputs on which ``f_j'`` and ``f_j``
agree.  It is the Gram matrix of the standard oracle operators divided by
``N`` (and of the entanglement-assisted minimal oracles divided by ``M``),
so the operators are unambiguously distinguishable iff its determinant is
positive.  All decisions here are made on exact integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import sympy

from ._exact import bareiss_det
from .functions import FunctionSet, FunctionTable, all_functions_set

EIGEN_EXACT_MAX_K = 6
EIGEN_TOL = 1e-9


@dataclass(frozen=True)
class CoincidenceMatrix:
    k: int
    m: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        e = self.entries
        if e.shape != (self.k, self.k):
            raise ValueError(f"expected a {self.k}x{self.k} matrix, got {e.shape}")
        if not np.array_equal(e, e.T):
            raise ValueError("coincidence matrix must be symmetric")
        if not np.all(np.diag(e) == self.m):
            raise ValueError(f"diagonal entries must all equal m={self.m}")
        if e.min() < 0 or e.max() > self.m:
            raise ValueError(f"entries must lie in [0, {self.m}]")

    def tolist(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)

    def __eq__(self, other):
        if isinstance(other, CoincidenceMatrix):
            return self.m == other.m and np.array_equal(self.entries, other.entries)
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.entries.tobytes()))

    def __repr__(self):
        return f"CoincidenceMatrix(k={self.k}, m={self.m}, entries={self.tolist()})"

    def principal_submatrix(self, indices) -> "CoincidenceMatrix":
        idx = list(indices)
        return CoincidenceMatrix(len(idx), self.m, self.entries[np.ix_(idx, idx)])


def coincidence_matrix(s: FunctionSet) -> CoincidenceMatrix:
    fm = s.function_matrix()
    entries = (fm[:, None, :] == fm[None, :, :]).sum(axis=2).astype(np.int64)
    return CoincidenceMatrix(s.k, s.m, entries)


def per_point_matrix(s: FunctionSet, x: int) -> np.ndarray:
    """0/1 matrix marking which pairs of functions agree at input ``x``."""
    if not 0 <= x < s.m:
        raise ValueError(f"x={x} out of range for M={s.m}")
    col = s.function_matrix()[:, x]
    return (col[:, None] == col[None, :]).astype(np.int64)


def exact_determinant(mat) -> int:
    """Determinant of an integer matrix as an exact Python int."""
    if isinstance(mat, CoincidenceMatrix):
        mat = mat.tolist()
    elif isinstance(mat, np.ndarray):
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"determinant needs a square matrix, got shape {mat.shape}")
        mat = mat.tolist()
    return bareiss_det(mat)


@dataclass(frozen=True)
class Verdict:
    distinguishable: bool
    det: int

    def __bool__(self):
        return self.distinguishable


def is_unambiguously_distinguishable(s: FunctionSet) -> Verdict:
    """Exact test for the standard (and, for permutations, minimal) oracles."""
    det = exact_determinant(coincidence_matrix(s))
    return Verdict(det > 0, det)


def dimension_bound_check(k: int, d_q: int) -> bool:
    """Necessary condition ``K <= D_Q`` for commuting unitaries."""
    return k <= d_q


def all_functions_verdict(m: int, n: int) -> bool:
    """Whether the standard oracles of every function in F_mn are distinguishable.

    ``m == 1`` or ``n == 1`` are the trivial yes cases.  For ``m = n = 2`` the
    4x4 coincidence matrix is singular; everywhere else ``K = n**m`` exceeds
    the dimension ``m*n`` because ``m < n**(m-1)``.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if m == 1 or n == 1:
        return True
    if (m, n) == (2, 2):
        return exact_determinant(coincidence_matrix(all_functions_set(2, 2))) > 0
    assert m < n ** (m - 1)
    return dimension_bound_check(n**m, m * n)


# -- Grover family -----------------------------------------------------------


def grover_set(m: int) -> FunctionSet:
    if m < 1:
        raise ValueError("m must be positive")
    return FunctionSet(
        m, 2, tuple(FunctionTable(m, 2, tuple(int(x == j) for x in range(m))) for j in range(m))
    )


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalues as ``(value, multiplicity)`` pairs plus the exact determinant.

    Values are :class:`fractions.Fraction`-compatible sympy rationals when
    they are rational and floats otherwise.
    """

    eigenvalues: tuple
    determinant: int

    def eigenvalue_product(self) -> float:
        return math.prod(float(v) ** mult for v, mult in self.eigenvalues)

    def as_multiset(self) -> list:
        out = []
        for v, mult in self.eigenvalues:
            out.extend([v] * mult)
        return out


def _merge(pairs):
    merged: dict = {}
    for v, mult in pairs:
        merged[v] = merged.get(v, 0) + mult
    return tuple(sorted(merged.items(), key=lambda p: float(p[0])))


def spectrum(mat) -> SpectrumReport:
    """Eigenvalues of a symmetric integer matrix.

    Up to ``EIGEN_EXACT_MAX_K`` rows the characteristic polynomial is factored
    over the rationals, so rational eigenvalues come back exact; roots of
    irreducible higher-degree factors are reported as floats.
    """
    if isinstance(mat, CoincidenceMatrix):
        rows = mat.tolist()
    else:
        rows = [[int(v) for v in r] for r in np.asarray(mat).tolist()]
    det = bareiss_det(rows)
    k = len(rows)
    if k <= EIGEN_EXACT_MAX_K:
        lam = sympy.Symbol("lam")
        poly = sympy.Matrix(rows).charpoly(lam)
        pairs = []
        for factor, mult in sympy.factor_list(poly.as_expr(), lam)[1]:
            p = sympy.Poly(factor, lam)
            if p.degree() == 1:
                a, b = p.all_coeffs()
                pairs.append((sympy.Rational(-b, a), mult))
            else:
                for root in np.roots([float(c) for c in p.all_coeffs()]):
                    pairs.append((round(float(root.real), 12), mult))
        return SpectrumReport(_merge(pairs), det)
    vals = np.linalg.eigvalsh(np.asarray(rows, dtype=float))
    pairs = []
    for v in np.sort(vals):
        if pairs and abs(pairs[-1][0] - v) <= EIGEN_TOL * max(1.0, abs(v)):
            pairs[-1] = (pairs[-1][0], pairs[-1][1] + 1)
        else:
            pairs.append((float(v), 1))
    return SpectrumReport(tuple(pairs), det)


def grover_gamma_closed_form(m: int) -> SpectrumReport:
    """Closed-form spectrum of the Grover coincidence matrix ``2I + (m-2)J``."""
    if m < 2:
        raise ValueError("closed form needs m >= 2")
    big = (m - 1) ** 2 + 1
    det = 2 ** (m - 1) * big
    return SpectrumReport(_merge([(sympy.Integer(2), m - 1), (sympy.Integer(big), 1)]), det)


def grover_phase_gram_det(m: int, theta: float) -> float:
    """Gram determinant of the phase-shift Grover oracles ``G_j(theta)``.

    ``2^{m-1} (1 - cos t)^{m-1} [(m - 1 + cos t)^2 + sin^2 t]``, evaluated
    with ``1 - cos t = 2 sin^2(t/2)`` and the bracket rewritten as
    ``(m-2)^2 + 4(m-1) cos^2(t/2)`` so neither factor cancels near
    ``t = 0`` or (for m = 2) near ``t = pi``.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    one_minus_cos = 2.0 * math.sin(theta / 2.0) ** 2
    bracket = (m - 2) ** 2 + 4 * (m - 1) * math.cos(theta / 2.0) ** 2
    return 2 ** (m - 1) * one_minus_cos ** (m - 1) * bracket


# -- JSON records ------------------------------------------------------------


def analysis_record(s: FunctionSet) -> dict:
    gamma = coincidence_matrix(s)
    det = exact_determinant(gamma)
    return {
        "k": s.k,
        "m": s.m,
        "n": s.n,
        "gamma": gamma.tolist(),
        "det": str(det),
        "distinguishable": det > 0,
    }
