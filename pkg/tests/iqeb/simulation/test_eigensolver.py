import numpy as np
import pytest

from iqeb import PauliString, PauliSum
from iqeb.errors import ContractViolation, ConvergenceError
from iqeb.simulation import exact_ground_energy, lanczos_ground, sector_indices


def random_hamiltonian(rng: np.random.Generator, n_qubits: int, terms: int = 40) -> PauliSum:
    strings = [PauliString(int(rng.integers(0, 1 << n_qubits)), int(rng.integers(0, 1 << n_qubits))) for _ in range(terms)]
    return PauliSum([(float(c), s) for c, s in zip(rng.normal(size=terms), strings)])


def test_ground_state_of_single_z() -> None:
    energy, state = exact_ground_energy(PauliSum.from_string("Z0"))

    assert energy == pytest.approx(-1.0)
    assert abs(state.amplitudes[1]) == pytest.approx(1.0)


def test_h2_dense_and_lanczos_agree(h2_hamiltonian: PauliSum, h2_energies: tuple[float, float]) -> None:
    _, fci = h2_energies

    dense, _ = exact_ground_energy(h2_hamiltonian, 2, method="dense")
    lanczos, state = exact_ground_energy(h2_hamiltonian, 2, method="lanczos", tol=1e-10)

    assert dense == pytest.approx(lanczos, abs=1e-10)
    assert dense == pytest.approx(fci, abs=1e-9)
    assert state.norm() == pytest.approx(1.0)


def test_sector_ground_state_stays_in_sector(h2_hamiltonian: PauliSum) -> None:
    _, state = exact_ground_energy(h2_hamiltonian, 2, spin_sector=0)
    weight = np.abs(state.amplitudes) ** 2

    assert weight[[0b0011, 0b1100, 0b0110, 0b1001]].sum() == pytest.approx(1.0)


def test_lanczos_matches_dense_spectrum(rng: np.random.Generator) -> None:
    h = random_hamiltonian(rng, 9)

    energy, _ = exact_ground_energy(h, n_qubits=9, method="lanczos", tol=1e-10)

    assert energy == pytest.approx(np.linalg.eigvalsh(h.to_matrix(9))[0], abs=1e-8)


def test_sector_indices_count_particles_and_spin() -> None:
    assert len(sector_indices(4, 2)) == 6
    assert sorted(int(i) for i in sector_indices(4, 2, 0)) == [0b0011, 0b0110, 0b1001, 0b1100]
    assert list(sector_indices(2, 0)) == [0]


def test_sector_indices_rejects_empty_sector() -> None:
    with pytest.raises(ValueError, match="Empty sector"):
        sector_indices(4, 2, 4)


def test_exact_ground_energy_rejects_non_hermitian_operator() -> None:
    with pytest.raises(ContractViolation):
        exact_ground_energy(PauliSum.from_string("X0", 1j))


def test_dense_method_refuses_large_registers() -> None:
    with pytest.raises(ValueError, match="up to 16"):
        exact_ground_energy(PauliSum.from_string("Z16"), method="dense")


def test_lanczos_raises_when_restarts_run_out(rng: np.random.Generator) -> None:
    matrix = random_hamiltonian(rng, 8, terms=60).to_sparse(8)

    with pytest.raises(ConvergenceError):
        lanczos_ground(matrix, rng.normal(size=256) + 0j, krylov_dim=2, max_restarts=1, tol=1e-14)
