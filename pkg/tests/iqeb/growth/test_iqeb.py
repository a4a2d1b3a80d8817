import pytest

from iqeb import GrowthConfig, MolecularIntegrals, PauliSum, iqeb_run, qubit_hamiltonian, spin_complement
from iqeb.errors import ContractViolation
from iqeb.excitations import make_generator
from iqeb.growth import IqebGrowth, reference_energies
from iqeb.growth.iqeb import COMPLEMENT_SEED_NOTE
from iqeb.models import ExcitationKind, Method, PoolKind, RunRecord, Selection, Termination


@pytest.fixture
def h2_run(h2_hamiltonian: PauliSum, h2_ints: MolecularIntegrals) -> RunRecord:
    return iqeb_run(h2_hamiltonian, h2_ints, GrowthConfig(epsilon=1e-8), fixture="h2_0.735.fcidump")


@pytest.fixture
def random_run(make_integrals) -> RunRecord:
    ints = make_integrals(n_spatial=3, n_electrons=2, seed=5)
    return iqeb_run(qubit_hamiltonian(ints), ints, GrowthConfig(n=4, max_iterations=4, threads=1))


def test_h2_reaches_fci_with_one_double(h2_run: RunRecord, h2_energies: tuple[float, float]) -> None:
    scf, fci = h2_energies

    assert h2_run.e_hf == pytest.approx(scf, abs=1e-10)
    assert h2_run.e_fci == pytest.approx(fci, abs=1e-10)
    assert h2_run.error <= 1e-8
    assert h2_run.n_iterations == 1
    first = h2_run.iterations[0]
    assert [(c.kind, c.indices) for c in first.chosen] == [(ExcitationKind.QUBIT_DOUBLE, (0, 1, 2, 3))]
    assert first.n_cnots == 13
    assert first.n_params == 1
    assert h2_run.termination in (Termination.EPSILON_REACHED, Termination.GRADIENT_FLOOR)
    assert h2_run.method is Method.IQEB
    assert h2_run.fixture == "h2_0.735.fcidump"
    assert h2_run.notes == [COMPLEMENT_SEED_NOTE]


def test_large_epsilon_stops_with_a_terminal_record(
    h2_hamiltonian: PauliSum, h2_ints: MolecularIntegrals, h2_energies: tuple[float, float]
) -> None:
    scf, fci = h2_energies

    run = iqeb_run(h2_hamiltonian, h2_ints, GrowthConfig(epsilon=1.0), references=h2_energies)

    assert run.termination is Termination.EPSILON_REACHED
    assert len(run.iterations) == 1
    terminal = run.iterations[0]
    assert not terminal.accepted
    assert terminal.chosen == []
    assert terminal.delta_e == pytest.approx(scf - fci, abs=1e-8)
    assert terminal.energy == scf
    assert run.n_iterations == 0
    assert run.final_energy == scf
    assert (run.n_params, run.n_cnots) == (0, 0)


def test_accepted_energies_never_increase(random_run: RunRecord) -> None:
    energies = [random_run.e_hf] + [r.energy for r in random_run.accepted]

    assert all(b <= a + 1e-12 for a, b in zip(energies, energies[1:]))
    assert all(r.delta_e > 0 for r in random_run.accepted)
    assert random_run.final_energy >= random_run.e_fci - 1e-9


def test_chosen_candidate_has_largest_energy_reduction(random_run: RunRecord) -> None:
    for record in random_run.accepted:
        assert 1 <= len(record.candidates) <= 4
        best = max(record.candidates, key=lambda c: (c.delta_e, -c.pool_index))
        assert record.chosen[0].pool_index == best.pool_index
        gradients = [abs(c.gradient) for c in record.candidates]
        assert gradients == sorted(gradients, reverse=True)
        assert record.grad == best.gradient


def test_resources_accumulate_over_chosen_elements(random_run: RunRecord) -> None:
    cnots, params = 0, 0
    for record in random_run.accepted:
        cnots += sum(c.cnot_cost for c in record.chosen)
        params += len(record.chosen)

        assert record.n_cnots == cnots
        assert record.n_params == params
        assert [c.slot for c in record.chosen] == list(range(params - len(record.chosen), params))


def test_spin_complement_follows_its_element(random_run: RunRecord) -> None:
    for record in random_run.accepted:
        first = make_generator(record.chosen[0].kind, record.chosen[0].indices)
        if len(record.chosen) == 1:
            assert spin_complement(first).key == first.key
            continue
        assert len(record.chosen) == 2
        assert record.chosen[1].indices == spin_complement(first).indices


def test_complement_off_appends_single_elements(make_integrals) -> None:
    ints = make_integrals(n_spatial=3, n_electrons=2, seed=5)
    config = GrowthConfig(n=2, max_iterations=3, spin_complement_append=False, threads=1)

    run = iqeb_run(qubit_hamiltonian(ints), ints, config)

    assert all(len(r.chosen) == 1 for r in run.accepted)
    assert not run.energy_after_complement
    assert run.notes == []


def test_iteration_cap_is_reported(make_integrals) -> None:
    ints = make_integrals(n_spatial=3, n_electrons=2, seed=5)

    run = iqeb_run(qubit_hamiltonian(ints), ints, GrowthConfig(max_iterations=1, threads=1))

    assert run.termination is Termination.MAX_ITERATIONS
    assert len(run.iterations) == 1
    assert run.iterations[0].accepted


def test_pair_pool_is_rejected(h2_hamiltonian: PauliSum, h2_ints: MolecularIntegrals) -> None:
    with pytest.raises(ContractViolation):
        IqebGrowth(h2_hamiltonian, h2_ints, GrowthConfig(pool_kind=PoolKind.FERMIONIC_PAIRS))


def test_gradient_selection_is_rejected(h2_hamiltonian: PauliSum, h2_ints: MolecularIntegrals) -> None:
    config = GrowthConfig(selection=Selection.LARGEST_GRADIENT)

    with pytest.raises(ContractViolation, match="energy reduction"):
        IqebGrowth(h2_hamiltonian, h2_ints, config)


def test_fermionic_pool_runs_on_h2(
    h2_hamiltonian: PauliSum, h2_ints: MolecularIntegrals, h2_energies: tuple[float, float]
) -> None:
    config = GrowthConfig(pool_kind=PoolKind.FERMIONIC, epsilon=1e-8)

    run = iqeb_run(h2_hamiltonian, h2_ints, config, references=h2_energies)

    assert run.error <= 1e-8
    assert run.iterations[0].chosen[0].kind is ExcitationKind.FERMIONIC_DOUBLE


def test_thread_count_does_not_change_the_run(make_integrals) -> None:
    ints = make_integrals(n_spatial=3, n_electrons=2, seed=9)
    h = qubit_hamiltonian(ints)
    references = reference_energies(h, ints)

    serial = iqeb_run(h, ints, GrowthConfig(n=3, max_iterations=3, threads=1), references=references)
    parallel = iqeb_run(h, ints, GrowthConfig(n=3, max_iterations=3, threads=4), references=references)

    assert [r.energy for r in serial.iterations] == [r.energy for r in parallel.iterations]
    assert [r.chosen for r in serial.iterations] == [r.chosen for r in parallel.iterations]
    assert serial.termination is parallel.termination


def test_config_snapshot_is_recorded(h2_run: RunRecord) -> None:
    assert h2_run.config["epsilon"] == 1e-8
    assert h2_run.config["pool_kind"] == "qubit"
    assert h2_run.config["optimizer"]["max_evaluations"] == 20000
    assert h2_run.energy_after_complement
