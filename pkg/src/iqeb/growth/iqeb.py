"""Iterative qubit-excitation-based ansatz growth.

Each iteration screens the pool by energy gradient, fully minimizes the
``n`` most promising candidates and keeps the one with the largest energy
reduction, optionally followed by its spin complement.
"""

from __future__ import annotations

import functools
import logging
import time

import numpy as np

from ..errors import ContractViolation
from ..excitations.generators import ExcitationGenerator, is_self_complement, spin_complement
from ..excitations.pool import ExcitationPool, build_pool
from ..models.config import GrowthConfig
from ..models.enums import Method, PoolKind, Selection, Termination
from ..models.records import CandidateRecord, ChosenElement, IterationRecord, RunRecord, ScreenStats
from ..operators.fermion import MolecularIntegrals, hartree_fock_reference
from ..operators.pauli import PauliSum
from ..optimization.ansatz import Ansatz, AnsatzObjective, prepare_state
from ..optimization.bfgs import OptimizeResult, minimize
from ..optimization.screening import screen_stats, top_candidates
from ._steps import describe, screen_pool
from ._workers import run_in_threads
from .reference import reference_energies


COMPLEMENT_SEED_NOTE = "spin complements start at their partner's angle, or at 0 when that gives the lower energy"


class IqebGrowth:
    """Mutable state of one run: the ansatz, its optimum and the trace."""

    def __init__(
        self,
        h: PauliSum,
        ints: MolecularIntegrals,
        config: GrowthConfig,
        *,
        pool: ExcitationPool | None = None,
        references: tuple[float, float] | None = None,
    ):
        if config.selection is not Selection.TOP_N_ENERGY_REDUCTION:
            raise ContractViolation(f"IQEB selects by top-n energy reduction, not {config.selection.value}")
        if config.pool_kind is PoolKind.FERMIONIC_PAIRS:
            raise ContractViolation("Candidate minimization works on single elements, not shared-slot pairs")
        self.h = h
        self.config = config
        n = ints.n_qubits
        self.pool = pool or build_pool(config.pool_kind, n)
        self.e_hf, self.e_fci = references or reference_energies(h, ints)
        self.ansatz = Ansatz(n, hartree_fock_reference(ints.n_electrons, n))
        self.theta = np.zeros(0)
        self.energy = self.e_hf
        self.iterations: list[IterationRecord] = []
        self._log = logging.getLogger(".".join((__name__, self.__class__.__name__)))

    def _candidate(self, index: int) -> OptimizeResult:
        trial = self.ansatz.append(self.pool[index])
        return minimize(trial, np.append(self.theta, 0.0), self.h, self.config.optimizer)

    def _append_complement(self, g: ExcitationGenerator) -> tuple[ExcitationGenerator, OptimizeResult]:
        """Append the spin complement on its own slot, seeded at its partner's value unless 0 is lower."""
        complement = spin_complement(g)
        trial = self.ansatz.append(complement)
        objective = AnsatzObjective.build(trial, self.h)
        seeded = np.append(self.theta, self.theta[-1])
        zero = np.append(self.theta, 0.0)
        start = seeded if objective(seeded)[0] < objective(zero)[0] else zero
        result = minimize(trial, start, self.h, self.config.optimizer)
        self.ansatz, self.theta, self.energy = trial, result.x, result.fun
        return complement, result

    def step(self, m: int) -> Termination | None:
        """Run iteration ``m``; a termination reason ends the run."""
        started = time.perf_counter()
        config = self.config
        psi = prepare_state(self.ansatz, self.theta)
        gradients = screen_pool(psi, self.h, self.pool, config.threads)
        stats = screen_stats(gradients, config.gradient_floor)
        if stats.largest_gradient < config.gradient_floor:
            self._log.info("Pool gradients below floor", extra={"m": m, "largest_gradient": stats.largest_gradient})
            return Termination.GRADIENT_FLOOR

        candidates = top_candidates(gradients, config.n)
        results = run_in_threads([functools.partial(self._candidate, i) for i in candidates], config.threads)
        records = [
            CandidateRecord(
                pool_index=i,
                gradient=float(gradients[i]),
                delta_e=self.energy - r.fun,
                evaluations=r.evaluations,
                budget_exhausted=r.budget_exhausted,
            )
            for i, r in zip(candidates, results)
        ]
        for record in records:
            self._log.debug("Candidate", extra={"m": m, **record.model_dump()})
            if record.budget_exhausted:
                self._log.warning("Candidate hit the evaluation budget", extra={"m": m, "pool_index": record.pool_index})
        best = min(range(len(records)), key=lambda n: (-records[n].delta_e, records[n].pool_index))
        chosen_index, result = candidates[best], results[best]
        evaluations = sum(r.evaluations for r in results)
        exhausted = any(r.budget_exhausted for r in results)
        delta = records[best].delta_e

        if delta < config.epsilon:
            self._record(m, [], gradients[chosen_index], delta, stats, records, evaluations, exhausted, started, False)
            self._log.info("Energy reduction below threshold", extra={"m": m, "delta_e": delta})
            return Termination.EPSILON_REACHED

        previous = self.energy
        g = self.pool[chosen_index]
        self.ansatz = self.ansatz.append(g)
        self.theta, self.energy = result.x, result.fun
        chosen = [describe(g, self.ansatz.n_params - 1, chosen_index)]
        if config.spin_complement_append and not is_self_complement(g):
            complement, refined = self._append_complement(g)
            evaluations += refined.evaluations
            exhausted |= refined.budget_exhausted
            chosen.append(describe(complement, self.ansatz.n_params - 1, self.pool.index(complement)))
        self._record(
            m, chosen, gradients[chosen_index], previous - self.energy, stats, records, evaluations, exhausted, started
        )
        return None

    def _record(
        self,
        m: int,
        chosen: list[ChosenElement],
        grad: float,
        delta: float,
        stats: ScreenStats,
        candidates: list[CandidateRecord],
        evaluations: int,
        exhausted: bool,
        started: float,
        accepted: bool = True,
    ) -> None:
        n_cnots, n_params = self.ansatz.resources()
        record = IterationRecord(
            m=m,
            chosen=chosen,
            grad=float(grad),
            delta_e=float(delta),
            energy=self.energy,
            n_params=n_params,
            n_cnots=n_cnots,
            accepted=accepted,
            screen=stats,
            candidates=candidates,
            evaluations=evaluations,
            budget_exhausted=exhausted,
            wall_ms=(time.perf_counter() - started) * 1e3,
        )
        self.iterations.append(record)
        if accepted:
            self._log.info(
                "Iteration",
                extra={
                    "m": m,
                    "chosen": [c.label() for c in chosen],
                    "energy": self.energy,
                    "delta_e": delta,
                    "n_params": n_params,
                    "n_cnots": n_cnots,
                },
            )

    def run(self) -> Termination:
        for m in range(1, self.config.max_iterations + 1):
            termination = self.step(m)
            if termination is not None:
                return termination
        self._log.warning("Iteration cap reached", extra={"max_iterations": self.config.max_iterations})
        return Termination.MAX_ITERATIONS


def iqeb_run(
    h: PauliSum,
    ints: MolecularIntegrals,
    config: GrowthConfig | None = None,
    *,
    fixture: str = "",
    method: Method = Method.IQEB,
    references: tuple[float, float] | None = None,
    seed: int | None = None,
) -> RunRecord:
    """Grow an ansatz by top-``n`` energy-reduction selection until the gain drops below ``epsilon``."""
    config = config or GrowthConfig()
    growth = IqebGrowth(h, ints, config, references=references)
    termination = growth.run()
    return RunRecord(
        method=method,
        fixture=fixture,
        config=config.model_dump(mode="json"),
        e_hf=growth.e_hf,
        e_fci=growth.e_fci,
        iterations=growth.iterations,
        termination=termination,
        energy_after_complement=config.spin_complement_append,
        notes=[COMPLEMENT_SEED_NOTE] if config.spin_complement_append else [],
        seed=seed,
    )
