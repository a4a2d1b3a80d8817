from __future__ import annotations

import functools

import numpy as np

from ..excitations.generators import ExcitationGenerator
from ..excitations.pool import ExcitationPool
from ..models.records import ChosenElement
from ..operators.pauli import PauliSum
from ..optimization.screening import hamiltonian_action, pool_gradients
from ..simulation.statevector import StateVector
from ._workers import partition, run_in_threads, worker_count


def screen_pool(psi: StateVector, h: PauliSum, pool: ExcitationPool, threads: int | None) -> np.ndarray:
    """Pool gradients with the pool split across worker threads, merged in pool order."""
    h_psi = hamiltonian_action(h, psi)
    chunks = partition(len(pool), worker_count(threads))
    tasks = [functools.partial(pool_gradients, psi, h, pool, chunk, h_psi=h_psi) for chunk in chunks]
    return np.concatenate(run_in_threads(tasks, threads)) if tasks else np.empty(0)


def describe(g: ExcitationGenerator, slot: int, pool_index: int | None = None) -> ChosenElement:
    return ChosenElement(
        kind=g.kind,
        indices=g.indices,
        letters=g.letters,
        cnot_cost=g.cnot_cost,
        slot=slot,
        pool_index=pool_index,
    )
