"""Explicit oracle matrices, probe states, and brute-force checks.

Everything here is built from matrix entries rather than from coincidence
counts, so it serves as the independent route for the results in
:mod:`oracle_usd.gram`.

Conventions: the standard oracle acts on ``H_M (x) H_N`` with basis index
``x * N + y``; tensor products are ``numpy.kron`` (row-major).  Permutation
matrices are ``int64`` arrays and are compared exactly; anything carrying a
phase is ``complex128`` and compared with :data:`UNITARY_TOL`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from ._exact import bareiss_rank
from .functions import (
    FunctionSet,
    FunctionTable,
    add_mod,
    identity_function,
    is_permutation,
    negate_mod,
)

UNITARY_TOL = 1e-12
RANK_TOL = 1e-9


class TriviallyDependentError(ValueError):
    """More operators than the dimension of the operator space."""


# -- oracle matrices ---------------------------------------------------------


def standard_oracle_matrix(f: FunctionTable) -> np.ndarray:
    """``U_f |x>|y> = |x>|y + f(x) mod N>`` as an MN x MN permutation matrix."""
    m, n = f.m, f.n
    u = np.zeros((m * n, m * n), dtype=np.int64)
    for x in range(m):
        for y in range(n):
            u[x * n + (y + f.values[x]) % n, x * n + y] = 1
    return u


def _require_permutation(f: FunctionTable):
    if not is_permutation(f):
        raise ValueError(f"minimal oracle needs a permutation, got {list(f.values)}")


def minimal_oracle_matrix(f: FunctionTable) -> np.ndarray:
    """``Q_f |x> = |f(x)>``; defined only for permutations."""
    _require_permutation(f)
    q = np.zeros((f.m, f.m), dtype=np.int64)
    q[list(f.values), list(range(f.m))] = 1
    return q


def entanglement_assisted_minimal(f: FunctionTable) -> np.ndarray:
    return np.kron(minimal_oracle_matrix(f), np.eye(f.m, dtype=np.int64))


def is_permutation_matrix(a: np.ndarray) -> bool:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return (
        bool(np.all((a == 0) | (a == 1)))
        and bool(np.all(a.sum(axis=0) == 1))
        and bool(np.all(a.sum(axis=1) == 1))
    )


def is_unitary(a: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    eye = np.eye(a.shape[0], dtype=a.dtype)
    prod = a.conj().T @ a
    if np.issubdtype(a.dtype, np.integer):
        return bool(np.array_equal(prod, eye))
    return float(np.max(np.abs(prod - eye))) <= tol


# -- probe states and Pegg-Barnett phase basis -------------------------------


@dataclass(frozen=True)
class ProbeState:
    """A normalized pure state on a tensor product of subsystems."""

    dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if int(np.prod(self.dims)) != amps.size:
            raise ValueError(f"dims {self.dims} do not match {amps.size} amplitudes")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > UNITARY_TOL:
            raise ValueError(f"probe is not normalized: squared norm {norm!r}")

    @classmethod
    def from_unnormalized(cls, dims, amplitudes) -> "ProbeState":
        v = np.asarray(amplitudes, dtype=complex).reshape(-1)
        return cls(tuple(dims), v / np.linalg.norm(v))

    def coefficients(self) -> np.ndarray:
        """Amplitudes reshaped as ``c[k, l]`` for a bipartite probe."""
        if len(self.dims) != 2:
            raise ValueError("coefficients() needs a bipartite probe")
        return self.amplitudes.reshape(self.dims)


def pegg_barnett_state(n: int, idx: int) -> ProbeState:
    """Phase state ``sum_y exp(2 pi i idx y / n) |y> / sqrt(n)``."""
    if not 0 <= idx < n:
        raise ValueError(f"phase index {idx} out of range for N={n}")
    y = np.arange(n)
    return ProbeState((n,), np.exp(2j * np.pi * idx * y / n) / np.sqrt(n))


def phase_basis(n: int) -> np.ndarray:
    """Unitary whose column ``idx`` is the phase state of index ``idx``."""
    return np.column_stack([pegg_barnett_state(n, i).amplitudes for i in range(n)])


def phase_operator(n: int) -> np.ndarray:
    """Hermitian phase operator with eigenvalue ``2 pi idx / n`` on phase state ``idx``."""
    v = phase_basis(n)
    return v @ np.diag(2 * np.pi * np.arange(n) / n) @ v.conj().T


def number_shift_operator(n: int) -> np.ndarray:
    """``exp(-i Phi_N)`` evaluated with a general matrix exponential."""
    return scipy.linalg.expm(-1j * phase_operator(n))


def cyclic_shift_matrix(n: int) -> np.ndarray:
    """Permutation matrix ``|y + 1 mod n><y|``."""
    s = np.zeros((n, n), dtype=np.int64)
    s[(np.arange(n) + 1) % n, np.arange(n)] = 1
    return s


def verify_shift_identity(n: int, tol: float = UNITARY_TOL) -> bool:
    return float(np.max(np.abs(number_shift_operator(n) - cyclic_shift_matrix(n)))) <= tol


def verify_eigenrelation(f: FunctionTable, x: int, idx: int, tol: float = UNITARY_TOL) -> bool:
    """Check that ``|x> (x) |phi_idx>`` is an eigenvector of ``U_f``.

    The expected eigenvalue is ``exp(-2 pi i idx f(x) / N)``.
    """
    if not 0 <= x < f.m:
        raise ValueError(f"x={x} out of range for M={f.m}")
    ket_x = np.zeros(f.m)
    ket_x[x] = 1.0
    vec = np.kron(ket_x, pegg_barnett_state(f.n, idx).amplitudes)
    out = standard_oracle_matrix(f) @ vec
    eigval = np.exp(-2j * np.pi * idx * f.values[x] / f.n)
    return float(np.max(np.abs(out - eigval * vec))) <= tol


# -- Gram matrices and linear independence -----------------------------------


def _check_square_family(ops: Sequence[np.ndarray]) -> int:
    if not ops:
        raise ValueError("need at least one operator")
    d = ops[0].shape[0]
    for i, a in enumerate(ops):
        if a.ndim != 2 or a.shape != (d, d):
            raise ValueError(f"operator {i} has shape {a.shape}, expected ({d}, {d})")
    return d


def gram_trace(ops: Sequence[np.ndarray]) -> np.ndarray:
    """Matrix of ``Tr(A_j'^dagger A_j)``; integer-valued for integer input."""
    _check_square_family(ops)
    stack = np.stack([np.asarray(a) for a in ops])
    flat = stack.reshape(len(ops), -1)
    if np.issubdtype(flat.dtype, np.integer):
        return flat @ flat.T
    return flat.conj() @ flat.T


def vectorize(ops: Sequence[np.ndarray]) -> np.ndarray:
    """Stack operators as rows of length ``d**2`` (row-major entries)."""
    _check_square_family(ops)
    return np.stack([np.asarray(a).reshape(-1) for a in ops])


def _integer_rows_compressed(rows: np.ndarray) -> list[list[int]]:
    # drop all-zero and repeated columns; neither changes the rank
    cols = np.unique(rows[:, np.any(rows != 0, axis=0)], axis=1)
    return cols.tolist()


def brute_force_linear_independence(ops: Sequence[np.ndarray]) -> bool:
    """Full-rank test on the vectorized operators.

    Integer families are decided by exact fraction-free elimination; complex
    families by singular values with threshold ``RANK_TOL * s_max``.
    """
    d = _check_square_family(ops)
    k = len(ops)
    if k > d * d:
        raise TriviallyDependentError(
            f"{k} operators cannot be independent in a space of dimension {d * d}"
        )
    rows = vectorize(ops)
    if np.issubdtype(rows.dtype, np.integer):
        return bareiss_rank(_integer_rows_compressed(rows)) == k
    sv = np.linalg.svd(rows.astype(complex), compute_uv=False)
    if sv[0] == 0:
        return False
    return int(np.sum(sv > RANK_TOL * sv[0])) == k


def standard_oracles(s: FunctionSet) -> list[np.ndarray]:
    return [standard_oracle_matrix(f) for f in s]


def entanglement_assisted_oracles(s: FunctionSet) -> list[np.ndarray]:
    return [entanglement_assisted_minimal(f) for f in s]


def tensor_power(a: np.ndarray, c: int) -> np.ndarray:
    if c < 1:
        raise ValueError("tensor power needs c >= 1")
    out = a
    for _ in range(c - 1):
        out = np.kron(out, a)
    return out


def verify_group_law(f: FunctionTable, g: FunctionTable) -> bool:
    uf, ug = standard_oracle_matrix(f), standard_oracle_matrix(g)
    product_ok = np.array_equal(uf @ ug, standard_oracle_matrix(add_mod(f, g)))
    inverse_ok = np.array_equal(uf.T, standard_oracle_matrix(negate_mod(f)))
    return bool(product_ok and inverse_ok)


# -- Grover phase oracles ----------------------------------------------------


def grover_phase_oracle(m: int, j: int, theta: float) -> np.ndarray:
    """Diagonal ``G_j(theta)``: phase ``exp(i theta)`` on item ``j`` only."""
    diag = np.ones(m, dtype=complex)
    diag[j] = np.exp(1j * theta)
    return np.diag(diag)


def grover_phase_gram(m: int, theta: float) -> np.ndarray:
    return gram_trace([grover_phase_oracle(m, j, theta) for j in range(m)])


def grover_phase_gram_det_numeric(m: int, theta: float) -> float:
    return float(np.linalg.det(grover_phase_gram(m, theta)).real)


# -- commuting families and product probes -----------------------------------


def oracle_phases(s: FunctionSet) -> tuple[np.ndarray, np.ndarray]:
    """Common eigenbasis and phases of the standard oracles of ``s``.

    Returns ``(phases, basis)`` with ``U_j = basis @ diag(exp(i phases[j])) @
    basis^dagger``; the basis is ``|x> (x) |phi_idx>``, ordered ``x * N + idx``.
    """
    n = s.n
    basis = np.kron(np.eye(s.m), phase_basis(n))
    phases = np.zeros((s.k, s.m * n))
    for j, f in enumerate(s):
        for x in range(s.m):
            for idx in range(n):
                phases[j, x * n + idx] = -2 * np.pi * idx * f.values[x] / n
    return phases, basis


def diagonal_family(phases: np.ndarray, basis: np.ndarray | None = None) -> list[np.ndarray]:
    phases = np.asarray(phases, dtype=float)
    d_q = phases.shape[1]
    v = np.eye(d_q, dtype=complex) if basis is None else np.asarray(basis, dtype=complex)
    return [v @ np.diag(np.exp(1j * row)) @ v.conj().T for row in phases]


def _state_gram(states: Sequence[np.ndarray]) -> np.ndarray:
    a = np.stack(states)
    return a.conj() @ a.T


def product_probe_reduction(
    phases: np.ndarray,
    probe: ProbeState,
    basis: np.ndarray | None = None,
    chi: np.ndarray | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Gram matrices of entangled-probe and product-probe outputs.

    ``phases[j, k]`` are the eigenphases of ``U_j`` on the ``k``-th column of
    ``basis`` (identity by default).  The entangled outputs
    ``(U_j (x) 1_A) |psi>`` are formed explicitly.  The product probe is
    ``|xi> (x) |chi>`` with ``|xi> = sum_k sqrt(p_k) |alpha_k>`` and
    ``p_k = sum_l |c_kl|^2`` taken in the eigenbasis; ``chi`` defaults to
    the first ancilla basis state.
    """
    phases = np.asarray(phases, dtype=float)
    if phases.ndim != 2:
        raise ValueError("phases must be a K x D_Q matrix")
    if not np.all(np.isfinite(phases)):
        raise ValueError("phases must be real and finite")
    d_q = phases.shape[1]
    if len(probe.dims) != 2 or probe.dims[0] != d_q:
        raise ValueError(f"probe dims {probe.dims} do not start with D_Q={d_q}")
    d_a = probe.dims[1]
    if d_q > d_a:
        raise ValueError(f"need D_Q <= D_A, got {d_q} > {d_a}")
    v = np.eye(d_q, dtype=complex) if basis is None else np.asarray(basis, dtype=complex)
    ops = diagonal_family(phases, v)
    eye_a = np.eye(d_a)
    psi = probe.amplitudes
    entangled = [np.kron(u, eye_a) @ psi for u in ops]

    c = v.conj().T @ probe.coefficients()
    p = np.sum(np.abs(c) ** 2, axis=1)
    xi = v @ np.sqrt(p)
    if chi is None:
        chi = np.zeros(d_a, dtype=complex)
        chi[0] = 1.0
    chi = np.asarray(chi, dtype=complex)
    product = [np.kron(u @ xi, chi) for u in ops]
    return _state_gram(entangled), _state_gram(product)


def max_schmidt_probe_grams(
    phases: np.ndarray,
    weights: np.ndarray,
    angles: np.ndarray,
    basis: np.ndarray | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Grams for a maximal-superposition probe and its maximum-Schmidt-rank twin.

    The single-system probe is ``sum_k sqrt(p_k) e^{i theta_k} |alpha_k>``;
    the twin is ``sum_k sqrt(p_k) e^{i theta_k} |alpha_k> (x) |alpha_k>``.
    """
    phases = np.asarray(phases, dtype=float)
    p = np.asarray(weights, dtype=float)
    if np.any(p <= 0):
        raise ValueError("a maximal superposition needs every weight > 0")
    p = p / p.sum()
    d_q = phases.shape[1]
    v = np.eye(d_q, dtype=complex) if basis is None else np.asarray(basis, dtype=complex)
    amps = np.sqrt(p) * np.exp(1j * np.asarray(angles, dtype=float))
    xi = v @ amps
    psi = sum(amps[k] * np.kron(v[:, k], v[:, k]) for k in range(d_q))
    ops = diagonal_family(phases, v)
    eye = np.eye(d_q)
    single = [u @ xi for u in ops]
    twin = [np.kron(u, eye) @ psi for u in ops]
    return _state_gram(single), _state_gram(twin)


# -- standard vs entanglement-assisted minimal oracles (M = N) ---------------

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)
P_PLUS = (np.eye(2) + SIGMA_X) / 2
P_MINUS = (np.eye(2) - SIGMA_X) / 2
CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.int64
)


def bilateral_transform_m2() -> tuple[np.ndarray, np.ndarray]:
    """``S, T`` with ``S Qbar_f T = U_f`` for both permutations of Z_2."""
    eye2 = np.eye(2)
    s = (np.kron(eye2, P_PLUS) + 1j * np.kron(SIGMA_Z, P_MINUS)) @ SWAP
    t = SWAP @ np.kron(eye2, P_PLUS - 1j * P_MINUS)
    return s, t


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def commutator_obstruction(m: int) -> tuple[FunctionTable, FunctionTable] | None:
    """First pair ``(f, f')`` whose minimal oracles fail to commute.

    Pairs are scanned with ``f'`` in the outer loop, both in lexicographic
    order.  For such a pair the shifted standard oracles ``U_f' U_id`` and
    ``U_f U_id`` still commute exactly; that is asserted before returning.
    Returns ``None`` for ``m = 2``, where all permutations commute.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    perms = [FunctionTable(m, m, p) for p in itertools.permutations(range(m))]
    u_id = standard_oracle_matrix(identity_function(m))
    for fp in perms:
        qp = entanglement_assisted_minimal(fp)
        for f in perms:
            q = entanglement_assisted_minimal(f)
            if np.any(commutator(qp, q) != 0):
                a = standard_oracle_matrix(fp) @ u_id
                b = standard_oracle_matrix(f) @ u_id
                assert not np.any(commutator(a, b))
                return f, fp
    return None


def maximally_entangled_state(d: int) -> np.ndarray:
    """``sum_i |i>|i> / sqrt(d)`` on two copies of a ``d``-dimensional space."""
    return np.eye(d).reshape(-1) / np.sqrt(d)


def choi_state_gram(s: FunctionSet) -> tuple[np.ndarray, np.ndarray]:
    """Grams of ``(U_f (x) 1)|Phi>`` and ``(Qbar_f (x) 1)|Phi>``.

    ``|Phi>`` is maximally entangled between two copies of the ``M^2``
    oracle register.  Both Grams should equal the coincidence matrix over ``M``.
    """
    if s.m != s.n:
        raise ValueError("choi_state_gram needs m == n")
    for j, f in enumerate(s):
        if not is_permutation(f):
            raise ValueError(f"member {j} is not a permutation: {list(f.values)}")
    d = s.m * s.m
    phi = maximally_entangled_state(d)
    eye = np.eye(d)
    u_states = [np.kron(standard_oracle_matrix(f), eye) @ phi for f in s]
    q_states = [np.kron(entanglement_assisted_minimal(f), eye) @ phi for f in s]
    return _state_gram(u_states), _state_gram(q_states)


# -- debugging dump ----------------------------------------------------------


def dump_matrix(a: np.ndarray) -> str:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("dump_matrix needs a square matrix")
    entries = [[float(v.real), float(v.imag)] for v in a.astype(complex).reshape(-1)]
    return json.dumps({"dim": a.shape[0], "entries": entries})


def load_matrix(text: str) -> np.ndarray:
    doc = json.loads(text)
    d = doc["dim"]
    vals = np.array([complex(re, im) for re, im in doc["entries"]])
    return vals.reshape(d, d)
