import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle_usd import (
    FunctionSet,
    all_functions_set,
    coincidence_matrix,
    distinguishable_with_calls,
    grover_set,
    hadamard_power,
    minimal_calls_search,
    sufficient_calls_bound,
)
from oracle_usd.multicall import (
    MultiCallReport,
    delta_min,
    is_strictly_diagonally_dominant,
    monotonicity_findings,
    tensor_consistency,
    tensor_oracles,
)
from oracle_usd.operators import brute_force_linear_independence, gram_trace

from conftest import leibniz_det


def test_f22_two_calls(f22):
    rep = distinguishable_with_calls(f22, 2, brute_force=True)
    assert hadamard_power(coincidence_matrix(f22), 2) == [
        [4, 1, 1, 0],
        [1, 4, 0, 1],
        [1, 0, 4, 1],
        [0, 1, 1, 4],
    ]
    assert rep.hadamard_det == 192 == leibniz_det(hadamard_power(coincidence_matrix(f22), 2))
    assert rep.distinguishable and rep.strictly_dominant
    assert rep.brute_force is True
    assert rep.delta_min == 1
    assert rep.sufficient_bound == 2
    assert minimal_calls_search(f22, 4).calls == 2


def test_f22_tensor_rank(f22):
    tensors = tensor_oracles(f22, 2)
    assert tensors[0].shape == (16, 16)
    assert brute_force_linear_independence(tensors)


def test_tensor_gram_is_scaled_hadamard_power():
    for s, c in ((all_functions_set(2, 2), 2), (grover_set(3), 2), (all_functions_set(1, 3), 3)):
        g = gram_trace(tensor_oracles(s, c))
        expected = s.n**c * np.array(hadamard_power(coincidence_matrix(s), c))
        assert np.array_equal(g, expected)


def test_tensor_consistency_cap(f22):
    assert tensor_consistency(f22, 3) is None
    assert tensor_consistency(f22, 3, max_dim=64) is True


@st.composite
def function_sets(draw):
    m = draw(st.integers(1, 3))
    n = draw(st.integers(2, 3))
    pool = list(itertools.product(range(n), repeat=m))
    k = draw(st.integers(2, min(5, len(pool))))
    rows = draw(st.lists(st.sampled_from(pool), min_size=k, max_size=k, unique=True))
    return FunctionSet.from_values(m, n, rows)


@settings(max_examples=150, deadline=None)
@given(function_sets(), st.integers(1, 4))
def test_hadamard_det_oracle_and_dominance(s, c):
    rep = distinguishable_with_calls(s, c)
    assert rep.hadamard_det == leibniz_det(hadamard_power(coincidence_matrix(s), c))
    if rep.strictly_dominant:
        assert rep.distinguishable


@settings(max_examples=60, deadline=None)
@given(function_sets(), st.integers(1, 2))
def test_hadamard_matches_tensor_rank(s, c):
    if s.k > (s.m * s.n) ** (2 * c) or (s.m * s.n) ** c > 36:
        return
    rep = distinguishable_with_calls(s, c, brute_force=True)
    assert rep.brute_force == rep.distinguishable


@settings(max_examples=200, deadline=None)
@given(function_sets())
def test_sufficient_bound_gives_dominance(s):
    c = sufficient_calls_bound(s)
    d = delta_min(s)
    # least C: the real-valued threshold lies between C-1 and C
    if d < s.m:
        threshold = math.log(s.k - 1) / (math.log(s.m) - math.log(s.m - d)) if s.k > 2 else 0.0
        assert c - 1 <= threshold + 1e-9
        assert c > threshold - 1e-9
    assert is_strictly_diagonally_dominant(hadamard_power(coincidence_matrix(s), c))
    assert distinguishable_with_calls(s, c).distinguishable


def test_delta_min_examples(f22, grover3):
    assert delta_min(f22) == 1
    assert delta_min(grover3) == 2
    assert delta_min(FunctionSet.from_values(2, 2, [[0, 0], [1, 1]])) == 2
    with pytest.raises(ValueError):
        delta_min(FunctionSet.from_values(2, 2, [[0, 0]]))


def test_bound_is_one_when_disjoint():
    s = FunctionSet.from_values(2, 3, [[0, 0], [1, 1], [2, 2]])
    assert sufficient_calls_bound(s) == 1


def test_diagonal_dominance_columns():
    assert is_strictly_diagonally_dominant([[3, 1], [1, 3]])
    assert not is_strictly_diagonally_dominant([[2, 1, 1], [1, 2, 1], [1, 1, 2]])
    # column sums, not row sums
    assert is_strictly_diagonally_dominant([[5, 1], [3, 5]])
    assert not is_strictly_diagonally_dominant([[5, 6], [1, 5]])
    with pytest.raises(ValueError):
        is_strictly_diagonally_dominant([[1, 2, 3]])


def test_hadamard_power_validation(f22):
    with pytest.raises(ValueError):
        hadamard_power(coincidence_matrix(f22), 0)


def test_minimal_calls_dimension_bound():
    s = all_functions_set(2, 2)
    assert minimal_calls_search(s, 1) == (None, "not found")
    big = all_functions_set(1, 2)
    assert minimal_calls_search(big, 3).calls == 1
    crowded = all_functions_set(3, 2)
    assert minimal_calls_search(crowded, 1) == (None, "dimension bound")
    with pytest.raises(ValueError):
        minimal_calls_search(s, 0)


def test_minimal_calls_f23():
    s = all_functions_set(2, 3)
    res = minimal_calls_search(s, 4)
    assert res.calls == 2
    assert distinguishable_with_calls(s, 2).hadamard_det == 80000


def test_monotone_on_examples(f22, grover3, tif4_m3):
    for s in (f22, grover3, tif4_m3, all_functions_set(2, 3)):
        assert monotonicity_findings(s, 5) == []


def test_report_json_round_trip(f22):
    rep = distinguishable_with_calls(f22, 2)
    doc = rep.to_json()
    assert doc == {
        "c": 2,
        "det": "192",
        "distinguishable": True,
        "dominant": True,
        "delta_min": 1,
        "sufficient_bound": 2,
    }
    assert MultiCallReport.from_json(doc) == rep


def test_report_invariants():
    with pytest.raises(AssertionError):
        MultiCallReport(1, 0, False, True, 1, 2)
    with pytest.raises(AssertionError):
        MultiCallReport(1, 5, False, False, 1, 2)
