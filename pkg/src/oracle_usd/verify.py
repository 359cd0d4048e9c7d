"""Built-in verification suites run by ``oracle-usd verify``.

Each suite is a function ``suite(seed) -> list[Check]``.  Suites only
compare explicit-matrix computations with the exact combinatorial ones and
never raise on a failed comparison.
"""

from __future__ import annotations

import itertools
from typing import Callable, NamedTuple

import numpy as np

from . import operators as ops
from .functions import (
    FunctionSet,
    all_functions_set,
    all_permutations,
    enumerate_all_functions,
    identity_function,
    make_function,
    zero_function,
)
from .gram import coincidence_matrix


class Check(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


def group_suite(seed: int = 0) -> list[Check]:
    out = []
    for m in (1, 2, 3):
        fs = enumerate_all_functions(m, m)
        bad = [(f, g) for f in fs for g in fs if not ops.verify_group_law(f, g)]
        ident = ops.standard_oracle_matrix(zero_function(m, m))
        out.append(Check(f"group law M=N={m}", not bad, f"{len(fs) ** 2} pairs, {len(bad)} failures"))
        out.append(Check(f"zero function is identity M=N={m}", np.array_equal(ident, np.eye(m * m, dtype=np.int64))))
    return out


def pegg_barnett_suite(seed: int = 0) -> list[Check]:
    out = []
    for n in range(1, 9):
        out.append(Check(f"number shift exp(-i Phi_{n}) |y> = |y+1>", ops.verify_shift_identity(n)))
        failures = 0
        total = 0
        for f in enumerate_all_functions(2, n):
            for x in range(2):
                for idx in range(n):
                    total += 1
                    failures += not ops.verify_eigenrelation(f, x, idx)
        out.append(Check(f"phase-state eigenrelation M=2, N={n}", failures == 0, f"{total} cases, {failures} failures"))
    return out


def _trace_sets() -> list[FunctionSet]:
    return [all_functions_set(m, n) for m, n in ((1, 3), (2, 2), (2, 3), (3, 2), (3, 3))]


def traces_suite(seed: int = 0) -> list[Check]:
    out = []
    for s in _trace_sets():
        gamma = coincidence_matrix(s).entries
        g = ops.gram_trace(ops.standard_oracles(s))
        out.append(Check(f"Tr(U^+ U) = N*Gamma on F_{s.m}{s.n}", bool(np.array_equal(g, s.n * gamma))))
    for m in (2, 3):
        s = FunctionSet(m, m, tuple(all_permutations(m)))
        gamma = coincidence_matrix(s).entries
        g = ops.gram_trace(ops.entanglement_assisted_oracles(s))
        out.append(Check(f"Tr(Qbar^+ Qbar) = M*Gamma on S_{m}", bool(np.array_equal(g, m * gamma))))
    return out


def product_probe_suite(seed: int = 0, draws: int = 50, tol: float = 1e-12) -> list[Check]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(draws):
        k = int(rng.integers(1, 5))
        d_q = int(rng.integers(1, 5))
        d_a = int(rng.integers(d_q, 5))
        phases = rng.uniform(-np.pi, np.pi, size=(k, d_q))
        basis = _random_unitary(rng, d_q)
        amps = rng.normal(size=d_q * d_a) + 1j * rng.normal(size=d_q * d_a)
        probe = ops.ProbeState.from_unnormalized((d_q, d_a), amps)
        ent, prod = ops.product_probe_reduction(phases, probe, basis)
        worst = max(worst, float(np.max(np.abs(ent - prod))))
    out = [Check("entangled vs product probe Gram", worst <= tol, f"{draws} draws, max deviation {worst:.2e}")]

    f22 = all_functions_set(2, 2)
    phases, basis = ops.oracle_phases(f22)
    diag_ok = all(
        np.max(np.abs(u - ops.standard_oracle_matrix(f))) <= tol
        for u, f in zip(ops.diagonal_family(phases, basis), f22)
    )
    out.append(Check("standard oracles diagonal in the phase basis (F_22)", diag_ok))
    d = phases.shape[1]
    amps = rng.normal(size=d * d) + 1j * rng.normal(size=d * d)
    ent, prod = ops.product_probe_reduction(phases, ops.ProbeState.from_unnormalized((d, d), amps), basis)
    dev = float(np.max(np.abs(ent - prod)))
    out.append(Check("F_22 oracles: entangled vs product probe Gram", dev <= tol, f"max deviation {dev:.2e}"))
    return out


def _random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def bilateral_suite(seed: int = 0, tol: float = 1e-12) -> list[Check]:
    s, t = ops.bilateral_transform_m2()
    out = [
        Check("S unitary", ops.is_unitary(s, tol)),
        Check("T unitary", ops.is_unitary(t, tol)),
    ]
    for name, vals in (("ID", (0, 1)), ("NOT", (1, 0))):
        f = make_function(2, 2, vals)
        dev = float(np.max(np.abs(s @ ops.entanglement_assisted_minimal(f) @ t - ops.standard_oracle_matrix(f))))
        out.append(Check(f"S Qbar_{name} T = U_{name}", dev <= tol, f"max deviation {dev:.2e}"))
    out.append(Check("U_ID is CNOT (exact)", bool(np.array_equal(ops.standard_oracle_matrix(identity_function(2)), ops.CNOT))))
    return out


def commutator_suite(seed: int = 0) -> list[Check]:
    out = [Check("M=2 has no obstruction", ops.commutator_obstruction(2) is None)]
    for m in (3, 4):
        pair = ops.commutator_obstruction(m)
        if pair is None:
            out.append(Check(f"M={m} witness found", False))
            continue
        f, fp = pair
        qmax = float(np.max(np.abs(ops.commutator(ops.entanglement_assisted_minimal(fp), ops.entanglement_assisted_minimal(f)))))
        u_id = ops.standard_oracle_matrix(identity_function(m))
        std = ops.commutator(ops.standard_oracle_matrix(fp) @ u_id, ops.standard_oracle_matrix(f) @ u_id)
        out.append(
            Check(
                f"M={m} witness f={list(f.values)} f'={list(fp.values)}",
                qmax > 0 and not np.any(std),
                f"minimal commutator max {qmax:g}, standard commutator max {int(np.max(np.abs(std)))}",
            )
        )
    return out


def choi_suite(seed: int = 0, tol: float = 1e-12) -> list[Check]:
    out = []
    for m in (1, 2, 3):
        perms = all_permutations(m)
        worst = 0.0
        count = 0
        for k in range(1, len(perms) + 1):
            for combo in itertools.combinations(perms, k):
                s = FunctionSet(m, m, combo)
                gu, gq = ops.choi_state_gram(s)
                target = coincidence_matrix(s).entries / m
                worst = max(worst, float(np.max(np.abs(gu - target))), float(np.max(np.abs(gq - target))))
                count += 1
        out.append(Check(f"Choi-state Grams equal Gamma/M for M={m}", worst <= tol, f"{count} sets, max deviation {worst:.2e}"))
    return out


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "group": group_suite,
    "pegg-barnett": pegg_barnett_suite,
    "traces": traces_suite,
    "product-probe": product_probe_suite,
    "bilateral": bilateral_suite,
    "commutator": commutator_suite,
    "choi": choi_suite,
}


def run(scope: str = "all", seed: int = 0) -> list[Check]:
    names = list(SUITES) if scope == "all" else [scope]
    out = []
    for name in names:
        out.extend(SUITES[name](seed))
    return out
