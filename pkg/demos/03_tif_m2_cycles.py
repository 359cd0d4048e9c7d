"""
Two-input TIF sets and their even cycles
========================================

With two inputs a function is a point ``(f(0), f(1))`` of an N x N grid.
Points in the same row or column are adjacent and the coincidence matrix
is ``A + 2I``. In a totally indistinguishable set every point has a row
neighbour and a column neighbour, so an alternating walk closes into an
induced even cycle, and an even cycle has eigenvalue -2.
"""

from pathlib import Path

from oracle_usd import (
    build_graph,
    coincidence_matrix,
    enumerate_tif_sets,
    exact_determinant,
    find_even_induced_cycle,
    load_function_set,
)
from oracle_usd.tif import cycle_spectrum, graph_to_text

data = Path(__file__).resolve().parent.parent / "data"
s = load_function_set(data / "squares_f24.json")
g = build_graph(s)
print(graph_to_text(g))
for c in find_even_induced_cycle(g):
    sub = coincidence_matrix(s).principal_submatrix(c.vertices)
    print(f"component {c.component}: cycle {c.vertices}, det of cycle block = {exact_determinant(sub)}")

print("cycle spectra:", {k: sorted(round(v, 3) for v in cycle_spectrum(k)) for k in (4, 6)})

# every TIF set over a 3x3 grid with up to 6 points
count = 0
for k in range(4, 7):
    for t in enumerate_tif_sets(2, 3, k):
        assert exact_determinant(coincidence_matrix(t)) == 0
        count += 1
print(f"{count} TIF sets in F_23 with K <= 6, all singular")
