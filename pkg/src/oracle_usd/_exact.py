"""Fraction-free (Bareiss) elimination on Python integers.

Every intermediate value is an integer minor of the input, so nothing is
ever rounded and the division in the update step is always exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _as_int_rows(mat) -> list[list[int]]:
    rows = [list(r) for r in mat]
    out = []
    for i, r in enumerate(rows):
        converted = []
        for v in r:
            iv = int(v)
            if iv != v:
                raise TypeError(f"non-integer entry {v!r} in row {i}")
            converted.append(iv)
        out.append(converted)
    return out


def bareiss_det(mat: Sequence[Sequence[int]]) -> int:
    a = _as_int_rows(mat)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError(f"determinant needs a square matrix, got {n} rows of lengths {[len(r) for r in a]}")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def bareiss_rank(mat: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix (any shape)."""
    a = _as_int_rows(mat)
    if not a:
        return 0
    ncols = len(a[0])
    if any(len(r) != ncols for r in a):
        raise ValueError("ragged matrix")
    nrows = len(a)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pivot = a[rank][col]
        row_r = a[rank]
        for i in range(rank + 1, nrows):
            row_i = a[i]
            aic = row_i[col]
            for j in range(col + 1, ncols):
                row_i[j] = (row_i[j] * pivot - aic * row_r[j]) // prev
            row_i[col] = 0
        prev = pivot
        rank += 1
    return rank


def fraction_rank(mat: Sequence[Sequence]) -> int:
    """Rank by plain Gaussian elimination over :class:`Fraction`."""
    a = [[Fraction(v) for v in r] for r in mat]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(rank + 1, nrows):
            factor = a[i][col] / a[rank][col]
            if factor:
                for j in range(col, ncols):
                    a[i][j] -= factor * a[rank][j]
        rank += 1
        if rank == nrows:
            break
    return rank
