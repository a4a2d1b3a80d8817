from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from iqeb import MolecularIntegrals, PauliSum, qubit_hamiltonian, read_fcidump

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# PySCF RHF / FCI, STO-3G, R = 0.735 Å
H2_SCF = -1.1169989967540052
H2_FCI = -1.1373060357534027

type IntegralsFactory = Callable[..., MolecularIntegrals]


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def h2_ints() -> MolecularIntegrals:
    return read_fcidump(FIXTURES / "h2_0.735.fcidump")


@pytest.fixture
def h2_hamiltonian(h2_ints: MolecularIntegrals) -> PauliSum:
    return qubit_hamiltonian(h2_ints)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20201027)


@pytest.fixture
def make_integrals() -> IntegralsFactory:
    """Random real integrals with the full 8-fold permutational symmetry."""

    def make(n_spatial: int = 3, n_electrons: int = 2, seed: int = 0) -> MolecularIntegrals:
        rng = np.random.default_rng(seed)
        noise = rng.normal(scale=0.1, size=(n_spatial, n_spatial))
        one_body = np.diag(np.linspace(-1.5, 0.5, n_spatial)) + (noise + noise.T) / 2
        g = rng.normal(scale=0.05, size=(n_spatial,) * 4)
        for perm in ((1, 0, 2, 3), (0, 1, 3, 2), (2, 3, 0, 1)):
            g = g + g.transpose(perm)
        return MolecularIntegrals(
            n_spatial=n_spatial,
            n_electrons=n_electrons,
            ms2=n_electrons % 2,
            core_energy=0.25,
            one_body=one_body,
            two_body=g,
        )

    return make


@pytest.fixture
def h2_energies() -> tuple[float, float]:
    """``(scf, fci)`` of the H2 fixture."""
    return H2_SCF, H2_FCI
