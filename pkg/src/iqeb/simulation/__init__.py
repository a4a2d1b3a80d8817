from .circuits import Gate, GateList, apply_gate_list, emit_ansatz, emit_circuit
from .eigensolver import exact_ground_energy, lanczos_ground, sector_indices
from .statevector import (
    StateVector,
    apply_excitation,
    apply_pauli_sum,
    basis_state,
    compile_operator,
    expectation,
    generator_action,
    rotate,
)

__all__ = [
    "StateVector",
    "basis_state",
    "apply_pauli_sum",
    "apply_excitation",
    "compile_operator",
    "expectation",
    "generator_action",
    "rotate",
    "exact_ground_energy",
    "lanczos_ground",
    "sector_indices",
    "Gate",
    "GateList",
    "emit_circuit",
    "emit_ansatz",
    "apply_gate_list",
]
