"""Gradient-greedy growth: ADAPT, qubit-ADAPT and plain largest-gradient runs."""

from __future__ import annotations

import dataclasses
import logging
import time

import numpy as np

from ..errors import ContractViolation
from ..excitations.pool import build_pool
from ..models.config import GrowthConfig
from ..models.enums import Method, PoolKind, Selection, Termination
from ..models.records import IterationRecord, RunRecord
from ..operators.fermion import MolecularIntegrals, hartree_fock_reference
from ..operators.pauli import PauliSum
from ..optimization.ansatz import Ansatz, prepare_state
from ..optimization.bfgs import minimize
from ..optimization.screening import group_gradients, screen_stats, top_candidates
from ._steps import describe, screen_pool
from .reference import reference_energies

log = logging.getLogger(__name__)

METHOD_BY_POOL = {
    PoolKind.QUBIT: Method.GREEDY_QUBIT,
    PoolKind.FERMIONIC: Method.GREEDY_FERMIONIC,
    PoolKind.FERMIONIC_PAIRS: Method.ADAPT,
    PoolKind.PAULI_EXPONENTIAL: Method.QUBIT_ADAPT,
}


def gradient_greedy_run(
    h: PauliSum,
    ints: MolecularIntegrals,
    config: GrowthConfig | None = None,
    *,
    fixture: str = "",
    method: Method | None = None,
    references: tuple[float, float] | None = None,
    seed: int | None = None,
) -> RunRecord:
    """Append the pool group of largest ``|gradient|`` and re-minimize, until that gradient drops below ``epsilon``.

    Groups of the spin-complement pair pool enter together on one shared slot.
    """
    config = config or GrowthConfig(selection=Selection.LARGEST_GRADIENT, spin_complement_append=False)
    if config.selection is not Selection.LARGEST_GRADIENT:
        raise ContractViolation(f"Gradient-greedy growth selects by largest gradient, not {config.selection.value}")
    n = ints.n_qubits
    pool = build_pool(config.pool_kind, n)
    e_hf, e_fci = references or reference_energies(h, ints)
    ansatz = Ansatz(n, hartree_fock_reference(ints.n_electrons, n))
    theta = np.zeros(0)
    energy = e_hf
    iterations: list[IterationRecord] = []
    termination = Termination.MAX_ITERATIONS

    for m in range(1, config.max_iterations + 1):
        started = time.perf_counter()
        psi = prepare_state(ansatz, theta)
        gradients = group_gradients(pool, screen_pool(psi, h, pool, config.threads))
        stats = screen_stats(gradients, config.gradient_floor)
        best = top_candidates(gradients, 1)[0]
        largest = stats.largest_gradient
        if largest < config.gradient_floor or largest < config.epsilon:
            termination = Termination.GRADIENT_FLOOR if largest < config.gradient_floor else Termination.EPSILON_REACHED
            n_cnots, n_params = ansatz.resources()
            iterations.append(
                IterationRecord(
                    m=m,
                    grad=float(gradients[best]),
                    delta_e=0.0,
                    energy=energy,
                    n_params=n_params,
                    n_cnots=n_cnots,
                    accepted=False,
                    screen=stats,
                    wall_ms=(time.perf_counter() - started) * 1e3,
                )
            )
            log.info("Largest gradient below threshold", extra={"m": m, "largest_gradient": largest})
            break

        group = pool.groups[best]
        slot = ansatz.n_params
        chosen = []
        for member, sign in zip(group.members, group.signs):
            g = pool[member]
            g = dataclasses.replace(g, orientation=g.orientation * sign)
            ansatz = ansatz.append(g, slot)
            chosen.append(describe(g, slot, member))
        result = minimize(ansatz, np.append(theta, 0.0), h, config.optimizer)
        if result.budget_exhausted:
            log.warning("Evaluation budget exhausted", extra={"m": m, "evaluations": result.evaluations})
        previous, theta, energy = energy, result.x, result.fun
        n_cnots, n_params = ansatz.resources()
        iterations.append(
            IterationRecord(
                m=m,
                chosen=chosen,
                grad=float(gradients[best]),
                delta_e=previous - energy,
                energy=energy,
                n_params=n_params,
                n_cnots=n_cnots,
                screen=stats,
                evaluations=result.evaluations,
                budget_exhausted=result.budget_exhausted,
                wall_ms=(time.perf_counter() - started) * 1e3,
            )
        )
        log.info(
            "Iteration",
            extra={
                "m": m,
                "chosen": [c.label() for c in chosen],
                "energy": energy,
                "delta_e": previous - energy,
                "n_params": n_params,
                "n_cnots": n_cnots,
            },
        )
    else:
        log.warning("Iteration cap reached", extra={"max_iterations": config.max_iterations})

    return RunRecord(
        method=method or METHOD_BY_POOL[config.pool_kind],
        fixture=fixture,
        config=config.model_dump(mode="json"),
        e_hf=e_hf,
        e_fci=e_fci,
        iterations=iterations,
        termination=termination,
        energy_after_complement=False,
        seed=seed,
    )
