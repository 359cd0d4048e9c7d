"""Totally indistinguishable function (TIF) sets.

Two separate tools live here:

* for ``M = 2``, the lattice graph whose vertex ``j`` sits at
  ``(f_j(0), f_j(1))``, plus the constructive walk that finds an induced
  even cycle in every connected component (which forces a zero determinant);
* for ``K = 4`` and any ``M``, the classification of function-matrix columns
  into four types and the closed-form determinant in their frequencies.

Axis naming: two vertices with the same Y coordinate are *X-adjacent* (the
edge runs along X), two with the same X coordinate are *Y-adjacent*.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .functions import (
    FunctionSet,
    FunctionTable,
    is_totally_indistinguishable,
)
from .gram import coincidence_matrix, exact_determinant

X_ADJ = "X"
Y_ADJ = "Y"

DEFAULT_SUBSET_LIMIT = 6


class NotTotallyIndistinguishable(ValueError):
    pass


# -- M = 2 graph -------------------------------------------------------------


@dataclass(frozen=True)
class TifGraph:
    vertices: tuple[tuple[int, tuple[int, int]], ...]
    edges: tuple[tuple[int, int, str], ...]
    adjacency: np.ndarray

    @property
    def k(self) -> int:
        return len(self.vertices)

    def coords(self, j: int) -> tuple[int, int]:
        return self.vertices[j][1]

    def neighbours(self, j: int, axis: str | None = None) -> list[int]:
        out = []
        for a, b, ax in self.edges:
            if axis is not None and ax != axis:
                continue
            if a == j:
                out.append(b)
            elif b == j:
                out.append(a)
        return sorted(out)

    def axis_between(self, a: int, b: int) -> str | None:
        (xa, ya), (xb, yb) = self.coords(a), self.coords(b)
        if ya == yb and xa != xb:
            return X_ADJ
        if xa == xb and ya != yb:
            return Y_ADJ
        return None

    def degree(self, j: int) -> int:
        return int(self.adjacency[j].sum())

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for start in range(self.k):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in np.flatnonzero(self.adjacency[v]):
                    w = int(w)
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps


def build_graph(s: FunctionSet) -> TifGraph:
    if s.m != 2:
        raise ValueError(f"the lattice graph needs m = 2, got m = {s.m}")
    vertices = tuple((j, (f.values[0], f.values[1])) for j, f in enumerate(s))
    adj = np.zeros((s.k, s.k), dtype=np.int64)
    edges = []
    for a, b in itertools.combinations(range(s.k), 2):
        (xa, ya), (xb, yb) = vertices[a][1], vertices[b][1]
        if ya == yb:
            edges.append((a, b, X_ADJ))
        elif xa == xb:
            edges.append((a, b, Y_ADJ))
        else:
            continue
        adj[a, b] = adj[b, a] = 1
    return TifGraph(vertices, tuple(edges), adj)


def induced_adjacency(g: TifGraph, indices: Sequence[int]) -> np.ndarray:
    idx = list(indices)
    return g.adjacency[np.ix_(idx, idx)]


def check_gamma_adjacency(s: FunctionSet, subset_limit: int = DEFAULT_SUBSET_LIMIT) -> bool:
    """Check ``Gamma = A + 2I`` on the whole set and on every small subset.

    For each vertex subset of size up to ``subset_limit`` the graph of the
    sub-family is rebuilt from scratch and compared both with the induced
    subgraph and with the principal submatrix of ``Gamma``.
    """
    g = build_graph(s)
    gamma = coincidence_matrix(s).entries
    eye = np.eye(s.k, dtype=np.int64)
    if not np.array_equal(gamma, g.adjacency + 2 * eye):
        return False
    for size in range(1, min(subset_limit, s.k) + 1):
        for idx in itertools.combinations(range(s.k), size):
            sub = s.subset(idx)
            sub_gamma = coincidence_matrix(sub).entries
            sub_adj = build_graph(sub).adjacency
            if not np.array_equal(sub_adj, induced_adjacency(g, idx)):
                return False
            if not np.array_equal(sub_gamma, gamma[np.ix_(idx, idx)]):
                return False
            if not np.array_equal(sub_gamma, sub_adj + 2 * np.eye(size, dtype=np.int64)):
                return False
    return True


def cross_neighbours_nonadjacent(g: TifGraph) -> bool:
    """If ``(j,k)`` are X-adjacent and ``(j,l)`` Y-adjacent, ``k, l`` are not adjacent."""
    for j in range(g.k):
        for k in g.neighbours(j, X_ADJ):
            for l in g.neighbours(j, Y_ADJ):
                if g.adjacency[k, l]:
                    return False
    return True


def cycle_spectrum(k: int) -> list[float]:
    """Eigenvalues ``2 cos(2 pi r / k)`` of the k-vertex cycle graph.

    ``r = k/2`` is returned as exactly ``-2.0`` for even ``k``.
    """
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    out = []
    for r in range(k):
        if 2 * r == k:
            out.append(-2.0)
        elif 4 * r == k or 4 * r == 3 * k:
            out.append(0.0)
        else:
            out.append(float(2.0 * np.cos(2.0 * np.pi * r / k)))
    return out


@dataclass(frozen=True)
class CycleResult:
    vertices: tuple[int, ...]
    component: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


def _walk_component(g: TifGraph, start: int) -> CycleResult:
    walk = [start]
    pos = {start: 0}
    axis = X_ADJ
    while True:
        current = walk[-1]
        options = g.neighbours(current, axis)
        if not options:
            raise NotTotallyIndistinguishable(
                f"vertex {current} has no {axis}-adjacent neighbour"
            )
        nxt = options[0]
        # a valid walk never revisits: closure would have fired one step earlier
        assert nxt not in pos, (walk, nxt)
        r = len(walk)
        walk.append(nxt)
        pos[nxt] = r
        earlier = [pos[w] for w in np.flatnonzero(g.adjacency[nxt]) if int(w) in pos and pos[int(w)] < r - 1]
        if earlier:
            r_close = max(earlier)
            cycle = tuple(walk[r_close:])
            comp = next(c for c in g.components() if start in c)
            return CycleResult(cycle, tuple(comp))
        axis = Y_ADJ if axis == X_ADJ else X_ADJ


def _check_walk_precondition(g: TifGraph):
    for j in range(g.k):
        if not g.neighbours(j, X_ADJ) or not g.neighbours(j, Y_ADJ):
            raise NotTotallyIndistinguishable(
                f"vertex {j} at {g.coords(j)} lacks an X- or Y-adjacent neighbour "
                f"(degree {g.degree(j)}); the set is not totally indistinguishable"
            )


def find_even_induced_cycle(g: TifGraph) -> list[CycleResult]:
    """One induced even cycle per connected component.

    The walk starts at the smallest vertex of the component, steps alternately
    to an X-adjacent and a Y-adjacent neighbour (smallest index first) and
    stops at the first vertex adjacent to a walk vertex other than its
    predecessor; the cycle closes on the latest such vertex and the tail
    before it is dropped.
    """
    _check_walk_precondition(g)
    return [_walk_component(g, comp[0]) for comp in g.components()]


def verify_cycle(g: TifGraph, cycle: CycleResult) -> list[str]:
    """Return the list of violated cycle invariants (empty when all hold)."""
    problems = []
    v = cycle.vertices
    k = len(v)
    if k % 2:
        problems.append(f"odd length {k}")
    if k < 4:
        problems.append(f"length {k} < 4")
    if len(set(v)) != k:
        problems.append("repeated vertex")
    axes = [g.axis_between(v[i], v[(i + 1) % k]) for i in range(k)]
    if any(a is None for a in axes):
        problems.append("consecutive vertices not adjacent")
    elif any(axes[i] == axes[(i + 1) % k] for i in range(k)):
        problems.append("axes do not alternate")
    sub = induced_adjacency(g, v)
    ring = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        ring[i, (i + 1) % k] = ring[(i + 1) % k, i] = 1
    if not np.array_equal(sub, ring):
        problems.append("not an induced cycle (chord present)")
    if not set(v) <= set(cycle.component):
        problems.append("leaves its connected component")
    return problems


@dataclass(frozen=True)
class M2Verdict:
    distinguishable: bool
    det: int
    cycles: tuple[CycleResult, ...]
    witness_det: int

    @property
    def witness(self) -> CycleResult:
        return self.cycles[0]


def m2_tif_verdict(s: FunctionSet) -> M2Verdict:
    """Non-distinguishability of a finite M = 2 TIF set, with a cycle witness."""
    if not is_totally_indistinguishable(s):
        raise NotTotallyIndistinguishable("input set is not totally indistinguishable")
    g = build_graph(s)
    cycles = tuple(find_even_induced_cycle(g))
    gamma = coincidence_matrix(s)
    witness_det = exact_determinant(gamma.principal_submatrix(cycles[0].vertices))
    det = exact_determinant(gamma)
    if witness_det != 0 or det != 0:
        raise AssertionError(
            f"cycle witness failed: det(sub)={witness_det}, det={det}"
        )
    return M2Verdict(False, det, cycles, witness_det)


def graph_to_text(g: TifGraph) -> str:
    """Vertex table ``j X Y`` then edge list ``j j' axis``."""
    lines = ["# vertices: j X Y"]
    lines += [f"{j} {x} {y}" for j, (x, y) in g.vertices]
    lines.append("# edges: j j' axis")
    lines += [f"{a} {b} {ax}" for a, b, ax in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, str]]]:
    vertices, edges = [], []
    section = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            section = "edges" if "edges" in line else "vertices"
            continue
        parts = line.split()
        if section == "vertices":
            vertices.append((int(parts[0]), int(parts[1]), int(parts[2])))
        else:
            edges.append((int(parts[0]), int(parts[1]), parts[2]))
    return vertices, edges


# -- K = 4 column profiles ---------------------------------------------------

# rows that carry a_x (the value of f_0) in each non-uniform column type
_TYPE_ROWS = {1: (0, 1, 2, 3), 2: (0, 1), 3: (0, 2), 4: (0, 3)}


@dataclass(frozen=True)
class ColumnProfile:
    n1: int
    n2: int
    n3: int
    n4: int

    @property
    def m(self) -> int:
        return self.n1 + self.n2 + self.n3 + self.n4

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n1, self.n2, self.n3, self.n4)


def classify_column(column: Sequence[int]) -> int:
    a = column[0]
    same = tuple(i for i, v in enumerate(column) if v == a)
    others = {v for v in column if v != a}
    for t, rows in _TYPE_ROWS.items():
        if same == rows and len(others) <= 1:
            return t
    raise ValueError(f"column {list(column)} matches no four-function column type")


def column_profile(s: FunctionSet) -> ColumnProfile:
    if s.k != 4:
        raise ValueError(f"column profiles need exactly 4 functions, got {s.k}")
    fm = s.function_matrix()
    counts = [0, 0, 0, 0]
    for x in range(s.m):
        counts[classify_column(fm[:, x].tolist()) - 1] += 1
    return ColumnProfile(*counts)


def tif4_det(p: ColumnProfile, m: int) -> int:
    if p.m != m:
        raise ValueError(f"profile sums to {p.m}, expected m = {m}")
    return 16 * (m + p.n1) * p.n2 * p.n3 * p.n4


def tif4_verdict(p: ColumnProfile) -> bool:
    return p.n2 > 0 and p.n3 > 0 and p.n4 > 0


def assemble_tif4(
    f0: FunctionTable, placement: Sequence[int], value_choices: Sequence[int | None]
) -> FunctionSet:
    """Four functions built column by column from ``f0`` and the column types.

    ``value_choices[x]`` is the second value used in column ``x``; it is
    ignored for type-1 columns.  No constraint on the profile is imposed
    beyond distinctness of the result.
    """
    m, n = f0.m, f0.n
    if len(placement) != m or len(value_choices) != m:
        raise ValueError("placement and value_choices need one entry per column")
    rows = [list(f0.values), [], [], []]
    for x, t in enumerate(placement):
        if t not in _TYPE_ROWS:
            raise ValueError(f"unknown column type {t} at column {x}")
        a = f0.values[x]
        abar = value_choices[x]
        if t != 1:
            if abar is None or not 0 <= abar < n:
                raise ValueError(f"column {x}: need a second value in [0, {n})")
            if abar == a:
                raise ValueError(f"column {x}: second value must differ from {a}")
        for r in (1, 2, 3):
            rows[r].append(a if r in _TYPE_ROWS[t] else abar)
    return FunctionSet.from_values(m, n, rows)


def generate_tif4(
    m: int,
    n: int,
    f0: FunctionTable,
    placement: Sequence[int],
    value_choices: Sequence[int | None],
) -> FunctionSet:
    """A four-function TIF set with distinguishable standard oracles."""
    if m < 3:
        raise ValueError("m >= 3 is needed for column types 2, 3 and 4 to all appear")
    if (f0.m, f0.n) != (m, n):
        raise ValueError("f0 does not match (m, n)")
    if not all(t in placement for t in (2, 3, 4)):
        raise ValueError("placement must use each of column types 2, 3 and 4")
    return assemble_tif4(f0, placement, value_choices)


def random_tif4_inputs(m: int, n: int, rng: random.Random):
    """Draw ``(f0, placement, value_choices)`` accepted by :func:`generate_tif4`."""
    if m < 3 or n < 2:
        raise ValueError("need m >= 3 and n >= 2")
    f0 = FunctionTable(m, n, tuple(rng.randrange(n) for _ in range(m)))
    placement = [2, 3, 4] + [rng.randint(1, 4) for _ in range(m - 3)]
    rng.shuffle(placement)
    choices = []
    for x in range(m):
        offset = rng.randrange(1, n)
        choices.append(None if placement[x] == 1 else (f0.values[x] + offset) % n)
    return f0, placement, choices
