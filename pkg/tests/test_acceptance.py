"""Acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints a
PASS/FAIL line per criterion.
"""

import itertools
import math
import random
import time

import numpy as np
import pytest

from oracle_usd import (
    FunctionSet,
    all_functions_set,
    build_graph,
    coincidence_matrix,
    column_profile,
    distinguishable_with_calls,
    enumerate_all_functions,
    enumerate_tif_sets,
    exact_determinant,
    find_even_induced_cycle,
    generate_tif4,
    grover_phase_gram_det,
    grover_set,
    sufficient_calls_bound,
    tif4_det,
)
from oracle_usd import operators as ops
from oracle_usd.functions import all_permutations, identity_function
from oracle_usd.multicall import tensor_oracles
from oracle_usd.tif import induced_adjacency, random_tif4_inputs, tif4_verdict, verify_cycle

TOL = 1e-12


@pytest.mark.criterion(1, "F_22 coincidence matrix and zero determinant")
def test_criterion_1_f22():
    start = time.perf_counter()
    s = all_functions_set(2, 2)
    gamma = coincidence_matrix(s)
    det = exact_determinant(gamma)
    elapsed = time.perf_counter() - start
    assert gamma.tolist() == [[2, 1, 1, 0], [1, 2, 0, 1], [1, 0, 2, 1], [0, 1, 1, 2]]
    assert det == 0 and isinstance(det, int)
    assert elapsed < 1.0


def _subsets(fs, kmax):
    for k in range(1, kmax + 1):
        yield from itertools.combinations(range(len(fs)), k)


@pytest.mark.slow
@pytest.mark.criterion(2, "determinant test agrees with explicit operator rank (K <= 5)")
def test_criterion_2_oracle_equivalence():
    start = time.perf_counter()
    for m, n in ((2, 2), (2, 3), (3, 2), (3, 3)):
        fs = enumerate_all_functions(m, n)
        mats = [ops.standard_oracle_matrix(f) for f in fs]
        mismatches = []
        checked = 0
        for idx in _subsets(fs, 5):
            s = FunctionSet(m, n, tuple(fs[i] for i in idx))
            by_det = exact_determinant(coincidence_matrix(s)) > 0
            by_rank = ops.brute_force_linear_independence([mats[i] for i in idx])
            checked += 1
            if by_det != by_rank:
                mismatches.append(idx)
        assert checked == sum(math.comb(len(fs), k) for k in range(1, 6))
        assert mismatches == [], (m, n, mismatches[:5])

        if m == n:
            perms = all_permutations(m)
            qbars = [ops.entanglement_assisted_minimal(p) for p in perms]
            for idx in _subsets(perms, 5):
                s = FunctionSet(m, m, tuple(perms[i] for i in idx))
                by_det = exact_determinant(coincidence_matrix(s)) > 0
                assert by_det == ops.brute_force_linear_independence([qbars[i] for i in idx]), idx
    assert time.perf_counter() - start < 300


def _rel_close(a, b, rel):
    # an exactly singular Gram (M=2, theta=pi) has no meaningful relative error
    return abs(a - b) <= rel * max(abs(a), abs(b), 1.0)


@pytest.mark.criterion(3, "Grover determinant closed forms")
def test_criterion_3_grover():
    for m in range(2, 13):
        assert exact_determinant(coincidence_matrix(grover_set(m))) == 2 ** (m - 1) * ((m - 1) ** 2 + 1)
    for m in range(2, 7):
        for theta in (0.1, math.pi / 2, math.pi, 2.7):
            numeric = ops.grover_phase_gram_det_numeric(m, theta)
            assert _rel_close(grover_phase_gram_det(m, theta), numeric, 1e-9), (m, theta)
        for k in (-2, -1, 0, 1, 2, 5):
            theta = 2 * math.pi * k
            assert abs(grover_phase_gram_det(m, theta)) <= 1e-9
            assert abs(ops.grover_phase_gram_det_numeric(m, theta)) <= 1e-9


@pytest.mark.criterion(4, "every small M=2 TIF set is singular with an even-cycle witness")
def test_criterion_4_m2_tif():
    total = 0
    for n in (2, 3):
        for k in range(4, 7):
            for s in enumerate_tif_sets(2, n, k):
                total += 1
                assert exact_determinant(coincidence_matrix(s)) == 0
                g = build_graph(s)
                cycles = find_even_induced_cycle(g)
                assert sorted(c.component for c in cycles) == sorted(tuple(c) for c in g.components())
                for c in cycles:
                    assert c.length >= 4 and c.length % 2 == 0
                    assert verify_cycle(g, c) == []
                    a = induced_adjacency(g, c.vertices)
                    assert exact_determinant(a + 2 * np.eye(c.length, dtype=np.int64)) == 0
    assert total > 0


@pytest.mark.criterion(5, "four-function closed-form determinant and verdict")
def test_criterion_5_k4():
    rng = random.Random(2024)
    for _ in range(100):
        m, n = rng.randint(3, 6), rng.randint(2, 4)
        s = generate_tif4(m, n, *random_tif4_inputs(m, n, rng))
        p = column_profile(s)
        det = exact_determinant(coincidence_matrix(s))
        assert tif4_det(p, m) == det
        assert tif4_verdict(p) == (det > 0)
    example = FunctionSet.from_values(3, 2, [[1, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    p = column_profile(example)
    assert p.as_tuple() == (0, 1, 1, 1)
    assert tif4_det(p, 3) == 48 == exact_determinant(coincidence_matrix(example))


@pytest.mark.criterion(6, "F_22 becomes distinguishable with two calls")
def test_criterion_6_multicall():
    s = all_functions_set(2, 2)
    assert not distinguishable_with_calls(s, 1).distinguishable
    rep = distinguishable_with_calls(s, 2, brute_force=True)
    assert rep.distinguishable and rep.hadamard_det == 192
    assert sufficient_calls_bound(s) == 2
    tensors = tensor_oracles(s, 2)
    assert all(t.shape == (16, 16) for t in tensors)
    assert ops.brute_force_linear_independence(tensors) is True
    assert rep.brute_force is True


def _random_unitary(rng, d):
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.mark.criterion(7, "entangled probe Gram equals product probe Gram")
def test_criterion_7_product_probe():
    rng = np.random.default_rng(12345)
    worst = 0.0
    for _ in range(50):
        k = int(rng.integers(1, 5))
        d_q = int(rng.integers(1, 5))
        d_a = int(rng.integers(d_q, 5))
        phases = rng.uniform(-np.pi, np.pi, size=(k, d_q))
        basis = _random_unitary(rng, d_q)
        amps = rng.normal(size=d_q * d_a) + 1j * rng.normal(size=d_q * d_a)
        probe = ops.ProbeState.from_unnormalized((d_q, d_a), amps)
        ent, prod = ops.product_probe_reduction(phases, probe, basis)
        worst = max(worst, float(np.max(np.abs(ent - prod))))
    assert worst <= TOL


@pytest.mark.criterion(8, "bilateral transform, commutator witness, Choi-state Grams")
def test_criterion_8_minimal_oracles():
    s_mat, t_mat = ops.bilateral_transform_m2()
    assert ops.is_unitary(s_mat, TOL) and ops.is_unitary(t_mat, TOL)
    for f in all_permutations(2):
        lhs = s_mat @ ops.entanglement_assisted_minimal(f) @ t_mat
        assert np.max(np.abs(lhs - ops.standard_oracle_matrix(f))) <= TOL
    u_id = ops.standard_oracle_matrix(identity_function(2))
    assert u_id.dtype == np.int64 and np.array_equal(u_id, ops.CNOT)

    f, fp = ops.commutator_obstruction(3)
    q_comm = ops.commutator(ops.entanglement_assisted_minimal(fp), ops.entanglement_assisted_minimal(f))
    u3 = ops.standard_oracle_matrix(identity_function(3))
    u_comm = ops.commutator(ops.standard_oracle_matrix(fp) @ u3, ops.standard_oracle_matrix(f) @ u3)
    assert np.any(q_comm != 0)
    assert not np.any(u_comm)

    for m in (1, 2, 3):
        perms = all_permutations(m)
        for k in range(1, len(perms) + 1):
            for combo in itertools.combinations(perms, k):
                s = FunctionSet(m, m, combo)
                gu, gq = ops.choi_state_gram(s)
                target = coincidence_matrix(s).entries / m
                assert np.max(np.abs(gu - gq)) <= TOL
                assert np.max(np.abs(gu - target)) <= TOL


@pytest.mark.criterion(9, "group laws and phase-state identities")
def test_criterion_9_structural():
    for m in (1, 2, 3):
        fs = enumerate_all_functions(m, m)
        for f, g in itertools.product(fs, fs):
            assert ops.verify_group_law(f, g), (f, g)
    for n in range(1, 9):
        assert ops.verify_shift_identity(n, TOL)
        for f in enumerate_all_functions(2, n):
            for x in range(2):
                for idx in range(n):
                    assert ops.verify_eigenrelation(f, x, idx, TOL)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
