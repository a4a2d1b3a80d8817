from .excitations import ExcitationGenerator, ExcitationPool, build_pool, spin_complement
from .growth import gradient_greedy_run, iqeb_run, reference_energies, uccsd_baseline
from .models import GrowthConfig, OptimizerSettings, RunRecord, from_msgpack, to_msgpack
from .operators import MolecularIntegrals, PauliString, PauliSum, qubit_hamiltonian, read_fcidump
from .optimization import Ansatz, energy, gradient, minimize, pool_gradients, prepare_state
from .simulation import StateVector, apply_excitation, emit_circuit, exact_ground_energy, expectation

__all__ = [
    "PauliString",
    "PauliSum",
    "MolecularIntegrals",
    "read_fcidump",
    "qubit_hamiltonian",
    "ExcitationGenerator",
    "ExcitationPool",
    "build_pool",
    "spin_complement",
    "StateVector",
    "apply_excitation",
    "expectation",
    "exact_ground_energy",
    "emit_circuit",
    "Ansatz",
    "prepare_state",
    "energy",
    "gradient",
    "pool_gradients",
    "minimize",
    "GrowthConfig",
    "OptimizerSettings",
    "RunRecord",
    "iqeb_run",
    "gradient_greedy_run",
    "uccsd_baseline",
    "reference_energies",
    "to_msgpack",
    "from_msgpack",
]
