from __future__ import annotations

import logging

from ..operators.fermion import MolecularIntegrals, hartree_fock_reference
from ..operators.pauli import PauliSum
from ..simulation.eigensolver import exact_ground_energy
from ..simulation.statevector import basis_state, expectation

log = logging.getLogger(__name__)


def reference_energies(h: PauliSum, ints: MolecularIntegrals) -> tuple[float, float]:
    """``(E_HF, E_FCI)``: the HF determinant expectation and the sector ground energy."""
    n = ints.n_qubits
    e_hf = expectation(h, basis_state(hartree_fock_reference(ints.n_electrons, n), n))
    e_fci, _ = exact_ground_energy(h, ints.n_electrons, n_qubits=n)
    log.info("Reference energies", extra={"n_qubits": n, "e_hf": e_hf, "e_fci": e_fci})
    return e_hf, e_fci
