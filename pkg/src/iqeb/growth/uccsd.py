"""Fixed unitary coupled-cluster singles and doubles baseline, one Trotter step."""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass

import numpy as np

from ..excitations.generators import ExcitationGenerator, fermionic_double, fermionic_single
from ..models.config import OptimizerSettings
from ..models.enums import Method, Termination
from ..models.records import IterationRecord, RunRecord
from ..operators.fermion import MolecularIntegrals, hartree_fock_reference
from ..operators.pauli import PauliSum
from ..optimization.ansatz import Ansatz
from ..optimization.bfgs import minimize
from ._steps import describe
from .reference import reference_energies

log = logging.getLogger(__name__)

TROTTER_NOTE = "UCCSD as a single Trotter step of spin-preserving fermionic singles then doubles"


@dataclass(frozen=True)
class UccsdResult:
    energy: float
    n_params: int
    n_cnots: int
    evaluations: int
    converged: bool
    budget_exhausted: bool
    ansatz: Ansatz
    theta: np.ndarray


def uccsd_parameter_count(n_qubits: int, n_electrons: int) -> int:
    """Spin-preserving singles and doubles out of the HF determinant (interleaved spins)."""
    alpha = (n_electrons + 1) // 2
    beta = n_electrons // 2
    virtual_alpha = n_qubits // 2 - alpha
    virtual_beta = n_qubits // 2 - beta
    singles = alpha * virtual_alpha + beta * virtual_beta
    same_spin = (alpha * (alpha - 1) // 2) * (virtual_alpha * (virtual_alpha - 1) // 2) + (beta * (beta - 1) // 2) * (
        virtual_beta * (virtual_beta - 1) // 2
    )
    return singles + same_spin + alpha * beta * virtual_alpha * virtual_beta


def uccsd_elements(n_qubits: int, n_electrons: int) -> list[ExcitationGenerator]:
    """Singles then doubles, each in lexicographic (occupied, virtual) order."""
    occupied = range(n_electrons)
    virtual = range(n_electrons, n_qubits)
    singles = [
        fermionic_single(a, i, n_qubits) for i, a in itertools.product(occupied, virtual) if i % 2 == a % 2
    ]
    doubles = [
        fermionic_double(a, b, i, j, n_qubits)
        for (i, j), (a, b) in itertools.product(itertools.combinations(occupied, 2), itertools.combinations(virtual, 2))
        if sorted((i % 2, j % 2)) == sorted((a % 2, b % 2))
    ]
    return singles + doubles


def uccsd_baseline(
    h: PauliSum, ints: MolecularIntegrals, optimizer: OptimizerSettings | None = None
) -> UccsdResult:
    n = ints.n_qubits
    elements = uccsd_elements(n, ints.n_electrons)
    ansatz = Ansatz(n, hartree_fock_reference(ints.n_electrons, n), tuple(elements), tuple(range(len(elements))))
    result = minimize(ansatz, np.zeros(ansatz.n_params), h, optimizer)
    n_cnots, n_params = ansatz.resources()
    if result.budget_exhausted:
        log.warning("UCCSD evaluation budget exhausted", extra={"evaluations": result.evaluations})
    log.info("UCCSD", extra={"energy": result.fun, "n_params": n_params, "n_cnots": n_cnots})
    return UccsdResult(
        energy=result.fun,
        n_params=n_params,
        n_cnots=n_cnots,
        evaluations=result.evaluations,
        converged=result.converged,
        budget_exhausted=result.budget_exhausted,
        ansatz=ansatz,
        theta=result.x,
    )


def uccsd_run(
    h: PauliSum,
    ints: MolecularIntegrals,
    optimizer: OptimizerSettings | None = None,
    *,
    fixture: str = "",
    references: tuple[float, float] | None = None,
    seed: int | None = None,
) -> RunRecord:
    """:func:`uccsd_baseline` as a one-iteration run record."""
    started = time.perf_counter()
    e_hf, e_fci = references or reference_energies(h, ints)
    baseline = uccsd_baseline(h, ints, optimizer)
    record = IterationRecord(
        m=1,
        chosen=[describe(g, slot) for g, slot in zip(baseline.ansatz.elements, baseline.ansatz.slots)],
        grad=0.0,
        delta_e=e_hf - baseline.energy,
        energy=baseline.energy,
        n_params=baseline.n_params,
        n_cnots=baseline.n_cnots,
        evaluations=baseline.evaluations,
        budget_exhausted=baseline.budget_exhausted,
        wall_ms=(time.perf_counter() - started) * 1e3,
    )
    return RunRecord(
        method=Method.UCCSD,
        fixture=fixture,
        config=(optimizer or OptimizerSettings()).model_dump(mode="json"),
        e_hf=e_hf,
        e_fci=e_fci,
        iterations=[record],
        termination=Termination.BUDGET_EXHAUSTED if baseline.budget_exhausted else Termination.CONVERGED,
        energy_after_complement=False,
        notes=[TROTTER_NOTE],
        seed=seed,
    )
