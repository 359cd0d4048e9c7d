"""Functions Z_M -> Z_N, their pointwise group law, and set-level predicates.

A :class:`FunctionTable` is the value list of one function; a
:class:`FunctionSet` is an ordered collection of distinct tables sharing
``(m, n)``.  Index ``j`` in a set is the label used everywhere else in the
package (row ``j`` of the coincidence matrix, vertex ``j`` of a graph, ...).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """An enumeration would examine more candidates than allowed.

    Raised from a generator after everything found within the budget has
    already been yielded, so the consumer holds a partial result.
    """

    def __init__(self, examined: int, budget: int):
        super().__init__(f"enumeration budget of {budget} candidates exceeded")
        self.examined = examined
        self.budget = budget


@dataclass(frozen=True)
class FunctionTable:
    m: int
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"m and n must be positive, got m={self.m}, n={self.n}")
        if len(self.values) != self.m:
            raise ValueError(
                f"expected {self.m} values, got {len(self.values)}"
            )
        for x, v in enumerate(self.values):
            if not 0 <= v < self.n:
                raise ValueError(
                    f"value {v} at index {x} out of range for N={self.n}"
                )

    def __call__(self, x: int) -> int:
        return self.values[x]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return self.m

    def __repr__(self) -> str:
        return f"FunctionTable(m={self.m}, n={self.n}, values={list(self.values)})"


def make_function(m: int, n: int, values: Iterable[int]) -> FunctionTable:
    return FunctionTable(int(m), int(n), tuple(int(v) for v in values))


def zero_function(m: int, n: int) -> FunctionTable:
    return FunctionTable(m, n, (0,) * m)


def identity_function(m: int) -> FunctionTable:
    return FunctionTable(m, m, tuple(range(m)))


@dataclass(frozen=True)
class FunctionSet:
    m: int
    n: int
    functions: tuple[FunctionTable, ...]

    def __post_init__(self):
        if not self.functions:
            raise ValueError("a function set needs at least one function")
        seen = {}
        for j, f in enumerate(self.functions):
            if (f.m, f.n) != (self.m, self.n):
                raise ValueError(
                    f"function {j} has shape (m={f.m}, n={f.n}), "
                    f"set has (m={self.m}, n={self.n})"
                )
            if f.values in seen:
                raise ValueError(
                    f"functions must be distinct: {j} repeats {seen[f.values]}"
                )
            seen[f.values] = j

    @classmethod
    def from_values(cls, m: int, n: int, rows: Iterable[Iterable[int]]) -> "FunctionSet":
        return cls(m, n, tuple(make_function(m, n, r) for r in rows))

    @property
    def k(self) -> int:
        return len(self.functions)

    def __len__(self) -> int:
        return len(self.functions)

    def __iter__(self) -> Iterator[FunctionTable]:
        return iter(self.functions)

    def __getitem__(self, j: int) -> FunctionTable:
        return self.functions[j]

    def function_matrix(self) -> np.ndarray:
        """The K x M array of values ``f_j(x)``."""
        return np.array([f.values for f in self.functions], dtype=np.int64).reshape(
            self.k, self.m
        )

    def subset(self, indices: Sequence[int]) -> "FunctionSet":
        return FunctionSet(self.m, self.n, tuple(self.functions[j] for j in indices))

    def rows(self) -> list[list[int]]:
        return [list(f.values) for f in self.functions]


# -- group law ---------------------------------------------------------------


def _check_same_shape(f: FunctionTable, g: FunctionTable):
    if (f.m, f.n) != (g.m, g.n):
        raise ValueError(
            f"shape mismatch: (m={f.m}, n={f.n}) vs (m={g.m}, n={g.n})"
        )


def add_mod(f: FunctionTable, g: FunctionTable) -> FunctionTable:
    _check_same_shape(f, g)
    return FunctionTable(f.m, f.n, tuple((a + b) % f.n for a, b in zip(f, g)))


def negate_mod(f: FunctionTable) -> FunctionTable:
    return FunctionTable(f.m, f.n, tuple((f.n - a) % f.n for a in f))


def is_permutation(f: FunctionTable) -> bool:
    if f.m != f.n:
        raise ValueError(
            f"permutations need m == n, got m={f.m}, n={f.n}"
        )
    return len(set(f.values)) == f.m


# -- enumeration -------------------------------------------------------------


def enumerate_all_functions(m: int, n: int, budget: int = DEFAULT_BUDGET) -> list[FunctionTable]:
    """All ``n**m`` functions, lexicographic in their value lists."""
    total = n**m
    if total > budget:
        raise BudgetExceeded(0, budget)
    return [FunctionTable(m, n, vals) for vals in itertools.product(range(n), repeat=m)]


def all_functions_set(m: int, n: int, budget: int = DEFAULT_BUDGET) -> FunctionSet:
    return FunctionSet(m, n, tuple(enumerate_all_functions(m, n, budget)))


def all_permutations(m: int) -> list[FunctionTable]:
    return [FunctionTable(m, m, p) for p in itertools.permutations(range(m))]


# -- classical predicates ----------------------------------------------------


def is_classically_distinguishable(s: FunctionSet) -> int | None:
    """Smallest input at which every member takes a different value, if any."""
    for x in range(s.m):
        column = [f.values[x] for f in s]
        if len(set(column)) == len(column):
            return x
    return None


def is_totally_indistinguishable(s: FunctionSet) -> bool:
    # every value occurring in a column must occur at least twice
    for x in range(s.m):
        counts: dict[int, int] = {}
        for f in s:
            counts[f.values[x]] = counts.get(f.values[x], 0) + 1
        if any(c == 1 for c in counts.values()):
            return False
    return True


def enumerate_tif_sets(
    m: int, n: int, k: int, budget: int = DEFAULT_BUDGET
) -> Iterator[FunctionSet]:
    """Yield every totally indistinguishable ``k``-subset of F_mn.

    Subsets come out in lexicographic order of their (sorted) member value
    lists.  Raises :class:`BudgetExceeded` once ``budget`` candidates have
    been examined without finishing; sets found up to that point have
    already been yielded.
    """
    if k < 4:
        return
    functions = enumerate_all_functions(m, n, budget)
    examined = 0
    for combo in itertools.combinations(functions, k):
        if examined >= budget:
            raise BudgetExceeded(examined, budget)
        examined += 1
        s = FunctionSet(m, n, combo)
        if is_totally_indistinguishable(s):
            yield s


# -- file format -------------------------------------------------------------


class FunctionSetFormatError(ValueError):
    pass


def parse_function_set(doc: dict) -> FunctionSet:
    """Build a set from the ``{"m", "n", "functions"}`` JSON document."""
    if not isinstance(doc, dict):
        raise FunctionSetFormatError("top level must be a JSON object")
    for key in ("m", "n", "functions"):
        if key not in doc:
            raise FunctionSetFormatError(f"missing field {key!r}")
    m, n, rows = doc["m"], doc["n"], doc["functions"]
    for key, val in (("m", m), ("n", n)):
        if not isinstance(val, int) or isinstance(val, bool) or val < 1:
            raise FunctionSetFormatError(f"field {key!r} must be a positive integer")
    if not isinstance(rows, list) or not rows:
        raise FunctionSetFormatError("field 'functions' must be a non-empty list")
    tables = []
    for j, row in enumerate(rows):
        if not isinstance(row, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in row
        ):
            raise FunctionSetFormatError(f"functions[{j}] must be a list of integers")
        try:
            tables.append(make_function(m, n, row))
        except ValueError as exc:
            raise FunctionSetFormatError(f"functions[{j}]: {exc}") from None
    try:
        return FunctionSet(m, n, tuple(tables))
    except ValueError as exc:
        raise FunctionSetFormatError(str(exc)) from None


def load_function_set(path: str | Path) -> FunctionSet:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FunctionSetFormatError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    return parse_function_set(doc)


def function_set_to_json(s: FunctionSet) -> dict:
    return {"m": s.m, "n": s.n, "functions": s.rows()}
