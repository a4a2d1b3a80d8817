"""Pool-gradient screening at ``theta_p = 0``."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..errors import ContractViolation
from ..excitations.pool import ExcitationPool
from ..models.records import ScreenStats
from ..operators.pauli import PauliSum
from ..simulation.statevector import StateVector, compile_operator, generator_action


def hamiltonian_action(h: PauliSum, psi: StateVector) -> np.ndarray:
    if not h.is_hermitian():
        raise ContractViolation("Pool screening needs a Hermitian Hamiltonian")
    return compile_operator(h, psi.n_qubits) @ psi.amplitudes


def pool_gradients(
    psi: StateVector,
    h: PauliSum,
    pool: ExcitationPool,
    members: Sequence[int] | None = None,
    *,
    h_psi: np.ndarray | None = None,
) -> np.ndarray:
    """``dE/dtheta_p`` at 0 of appending each pool element, in pool order.

    Computed as ``2 Re <H psi | A_p psi>``. Pass ``members`` to screen a slice
    of the pool and ``h_psi`` to share one ``H psi`` across slices.
    """
    if h_psi is None:
        h_psi = hamiltonian_action(h, psi)
    members = range(len(pool)) if members is None else members
    out = np.empty(len(members))
    for n, index in enumerate(members):
        action = generator_action(pool[index], psi.amplitudes, psi.n_qubits)
        out[n] = 2.0 * np.vdot(h_psi, action).real
    return out


def group_gradients(pool: ExcitationPool, gradients: np.ndarray) -> np.ndarray:
    """Gradient of each pool group's shared parameter: ``sum(sign * g)`` over members."""
    return np.array([sum(s * gradients[m] for m, s in zip(group.members, group.signs)) for group in pool.groups])


def top_candidates(gradients: np.ndarray, n: int) -> list[int]:
    """Indices of the ``n`` largest ``|g|``; ties go to the lower index."""
    order = np.argsort(-np.abs(gradients), kind="stable")
    return [int(i) for i in order[:n]]


def screen_stats(gradients: np.ndarray, floor: float) -> ScreenStats:
    magnitudes = np.abs(gradients)
    return ScreenStats(
        largest_gradient=float(magnitudes.max(initial=0.0)),
        above_floor=int((magnitudes >= floor).sum()),
        pool_size=int(magnitudes.size),
    )
