from .fcidump import dumps_fcidump, parse_fcidump, read_fcidump, write_fcidump
from .fermion import (
    FermionOperator,
    MolecularIntegrals,
    build_molecular_hamiltonian,
    hartree_fock_reference,
    jw_ladder,
    jw_transform,
    qubit_hamiltonian,
)
from .pauli import IDENTITY, SIMPLIFY_FLOOR, PauliString, PauliSum, anticommutator, commutator, mul_strings

__all__ = [
    "IDENTITY",
    "SIMPLIFY_FLOOR",
    "PauliString",
    "PauliSum",
    "mul_strings",
    "commutator",
    "anticommutator",
    "FermionOperator",
    "MolecularIntegrals",
    "build_molecular_hamiltonian",
    "hartree_fock_reference",
    "jw_ladder",
    "jw_transform",
    "qubit_hamiltonian",
    "parse_fcidump",
    "read_fcidump",
    "write_fcidump",
    "dumps_fcidump",
]
