import numpy as np
import pytest

from iqeb import MolecularIntegrals, PauliSum, uccsd_baseline
from iqeb.growth import uccsd_elements, uccsd_parameter_count, uccsd_run
from iqeb.growth.uccsd import TROTTER_NOTE
from iqeb.models import ExcitationKind, Method, OptimizerSettings, Termination


@pytest.mark.parametrize(("n_qubits", "n_electrons", "count"), [(4, 2, 3), (12, 4, 92), (14, 6, 204), (6, 3, 8)])
def test_parameter_count_matches_element_list(n_qubits: int, n_electrons: int, count: int) -> None:
    assert uccsd_parameter_count(n_qubits, n_electrons) == count
    assert len(uccsd_elements(n_qubits, n_electrons)) == count


def test_elements_are_singles_then_spin_preserving_doubles() -> None:
    elements = uccsd_elements(8, 4)
    kinds = [g.kind for g in elements]
    n_singles = kinds.count(ExcitationKind.FERMIONIC_SINGLE)

    assert kinds == [ExcitationKind.FERMIONIC_SINGLE] * n_singles + [ExcitationKind.FERMIONIC_DOUBLE] * (
        len(kinds) - n_singles
    )
    for g in elements:
        spins = [i % 2 for i in g.indices]
        assert sorted(spins[: len(spins) // 2]) == sorted(spins[len(spins) // 2 :])


def test_h2_baseline_is_exact(h2_hamiltonian: PauliSum, h2_ints: MolecularIntegrals, h2_energies) -> None:
    _, fci = h2_energies

    result = uccsd_baseline(h2_hamiltonian, h2_ints)

    assert result.energy == pytest.approx(fci, abs=1e-6)
    assert result.energy >= fci - 1e-9
    assert result.n_params == 3
    assert result.n_cnots == 5 + 5 + 13
    assert result.theta.shape == (3,)
    np.testing.assert_allclose(result.theta[:2], 0.0, atol=1e-6)


def test_run_record_carries_the_trotter_note(
    h2_hamiltonian: PauliSum, h2_ints: MolecularIntegrals, h2_energies
) -> None:
    scf, _ = h2_energies

    run = uccsd_run(h2_hamiltonian, h2_ints, fixture="h2", references=h2_energies, seed=3)

    assert run.method is Method.UCCSD
    assert run.notes == [TROTTER_NOTE]
    assert run.termination is Termination.CONVERGED
    assert run.n_iterations == 1
    record = run.iterations[0]
    assert len(record.chosen) == 3
    assert record.delta_e == pytest.approx(scf - record.energy)
    assert (run.n_params, run.n_cnots) == (3, 23)
    assert run.seed == 3
    assert run.config["max_evaluations"] == 20000


def test_budget_exhaustion_is_reported(h2_hamiltonian: PauliSum, h2_ints: MolecularIntegrals, h2_energies) -> None:
    run = uccsd_run(h2_hamiltonian, h2_ints, OptimizerSettings(max_evaluations=1), references=h2_energies)

    assert run.termination is Termination.BUDGET_EXHAUSTED
    assert run.iterations[0].budget_exhausted
    assert run.final_energy == pytest.approx(h2_energies[0], abs=1e-10)
