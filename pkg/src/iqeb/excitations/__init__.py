from .generators import (
    ExcitationGenerator,
    fermionic_double,
    fermionic_double_cost,
    fermionic_single,
    fermionic_single_cost,
    is_self_complement,
    make_generator,
    pauli_exponential_generator,
    qubit_double,
    qubit_single,
    spin_complement,
    spin_partner,
)
from .pool import ExcitationPool, PoolGroup, ansatz_resources, build_pool, expected_pool_size

__all__ = [
    "ExcitationGenerator",
    "ExcitationPool",
    "PoolGroup",
    "qubit_single",
    "qubit_double",
    "fermionic_single",
    "fermionic_double",
    "fermionic_single_cost",
    "fermionic_double_cost",
    "pauli_exponential_generator",
    "make_generator",
    "spin_complement",
    "spin_partner",
    "is_self_complement",
    "build_pool",
    "expected_pool_size",
    "ansatz_resources",
]
