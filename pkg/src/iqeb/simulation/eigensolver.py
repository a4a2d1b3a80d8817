"""Exact ground states: dense diagonalization or restarted Lanczos, optionally per sector."""

from __future__ import annotations

import logging
from typing import Literal

import numpy as np
from scipy import linalg, sparse

from ..errors import ContractViolation, ConvergenceError
from ..operators.pauli import PauliSum
from .statevector import StateVector, compile_operator

log = logging.getLogger(__name__)

DENSE_MAX_QUBITS = 8
DENSE_LIMIT_QUBITS = 16
ITERATIVE_LIMIT_QUBITS = 20

type Method = Literal["auto", "dense", "lanczos"]


def sector_indices(n_qubits: int, particles: int | None = None, ms2: int | None = None) -> np.ndarray:
    """Basis indices with ``particles`` set bits and ``ms2 = n_alpha - n_beta``.

    Even qubits are alpha spin-orbitals, odd qubits beta.
    """
    index = np.arange(1 << n_qubits, dtype=np.int64)
    keep = np.ones(index.shape, dtype=bool)
    if particles is not None:
        keep &= np.bitwise_count(index) == particles
    if ms2 is not None:
        alpha_mask = sum(1 << q for q in range(0, n_qubits, 2))
        n_alpha = np.bitwise_count(index & alpha_mask).astype(np.int64)
        n_beta = np.bitwise_count(index & ~alpha_mask & ((1 << n_qubits) - 1)).astype(np.int64)
        keep &= n_alpha - n_beta == ms2
    selected = index[keep]
    if selected.size == 0:
        raise ValueError(f"Empty sector: {particles} particles, ms2={ms2} on {n_qubits} qubits")
    return selected


def lanczos_ground(
    matrix: sparse.spmatrix | np.ndarray,
    start: np.ndarray,
    *,
    krylov_dim: int = 60,
    tol: float = 1e-8,
    max_restarts: int = 100,
) -> tuple[float, np.ndarray]:
    """Lowest eigenpair of a Hermitian matrix.

    Explicitly restarted Lanczos with full re-orthogonalization; stops when the
    Ritz residual ``||A v - e v||`` drops below ``tol``.
    """
    dim = start.shape[0]
    v = start.astype(np.complex128)
    v /= np.linalg.norm(v)
    m = min(krylov_dim, dim)
    residual = np.inf
    for restart in range(max_restarts):
        basis = np.zeros((m, dim), dtype=np.complex128)
        alpha: list[float] = []
        beta: list[float] = []
        basis[0] = v
        for j in range(m):
            w = matrix @ basis[j]
            a = float(np.vdot(basis[j], w).real)
            alpha.append(a)
            w = w - a * basis[j]
            if j:
                w -= beta[j - 1] * basis[j - 1]
            for _ in range(2):
                w -= basis[: j + 1].T @ (basis[: j + 1].conj() @ w)
            b = float(np.linalg.norm(w))
            if j == m - 1 or b < 1e-14:
                break
            beta.append(b)
            basis[j + 1] = w / b
        k = len(alpha)
        if k == 1:
            value, coefficients = alpha[0], np.ones(1)
        else:
            values, vectors = linalg.eigh_tridiagonal(
                np.asarray(alpha), np.asarray(beta[: k - 1]), select="i", select_range=(0, 0)
            )
            value, coefficients = float(values[0]), vectors[:, 0]
        ritz = coefficients @ basis[:k]
        ritz /= np.linalg.norm(ritz)
        residual = float(np.linalg.norm(matrix @ ritz - value * ritz))
        log.debug("Lanczos restart", extra={"restart": restart, "krylov": k, "ritz": value, "residual": residual})
        if residual < tol:
            return value, ritz
        v = ritz
    raise ConvergenceError(f"Lanczos did not converge after {max_restarts} restarts (residual {residual:.3e})")


def exact_ground_energy(
    h: PauliSum,
    particle_sector: int | None = None,
    *,
    n_qubits: int | None = None,
    spin_sector: int | None = None,
    method: Method = "auto",
    tol: float = 1e-8,
) -> tuple[float, StateVector]:
    """Lowest eigenvalue of ``h`` and its eigenvector, within a sector when one is given.

    ``auto`` diagonalizes densely up to 8 qubits and runs Lanczos above.
    """
    if not h.is_hermitian():
        raise ContractViolation("Ground-state search needs a Hermitian operator")
    n = h.n_qubits if n_qubits is None else n_qubits
    if method == "auto":
        method = "dense" if n <= DENSE_MAX_QUBITS else "lanczos"
    limit = DENSE_LIMIT_QUBITS if method == "dense" else ITERATIVE_LIMIT_QUBITS
    if n > limit:
        raise ValueError(f"{method} ground-state search supports up to {limit} qubits, got {n}")

    full = compile_operator(h, n)
    if particle_sector is None and spin_sector is None:
        index = np.arange(1 << n, dtype=np.int64)
        block = full
    else:
        index = sector_indices(n, particle_sector, spin_sector)
        block = full[index][:, index]

    if method == "dense":
        values, vectors = np.linalg.eigh(block.toarray())
        energy, local = float(values[0]), vectors[:, 0]
    else:
        start = np.random.default_rng(0).standard_normal(index.size) + 0j
        energy, local = lanczos_ground(block, start, tol=tol)

    amplitudes = np.zeros(1 << n, dtype=np.complex128)
    amplitudes[index] = local
    log.info(
        "Ground state",
        extra={"method": method, "n_qubits": n, "sector_dim": int(index.size), "energy": energy},
    )
    return energy, StateVector(n, amplitudes)
