"""Parametrized ansatz states, energies and adjoint-method gradients."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from ..excitations.generators import ExcitationGenerator
from ..excitations.pool import ansatz_resources
from ..operators.pauli import PauliSum
from ..simulation.statevector import StateVector, basis_state, compile_operator, generator_action, rotate


@dataclass(frozen=True)
class Ansatz:
    """``U_m(theta_slot(m)) ... U_1(theta_slot(1)) |reference>``.

    Elements are stored in application order; new elements act last.
    """

    n_qubits: int
    reference: int
    elements: tuple[ExcitationGenerator, ...] = ()
    slots: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.elements) != len(self.slots):
            raise ValueError(f"{len(self.elements)} elements but {len(self.slots)} slots")
        if set(self.slots) != set(range(self.n_params)):
            raise ValueError(f"Parameter slots must be contiguous from 0, got {self.slots}")
        if not 0 <= self.reference < 1 << self.n_qubits:
            raise ValueError(f"Reference {self.reference:#b} does not fit {self.n_qubits} qubits")
        for g in self.elements:
            if g.n_qubits > self.n_qubits:
                raise IndexError(f"{g.label()} does not fit {self.n_qubits} qubits")

    @property
    def n_params(self) -> int:
        return max(self.slots, default=-1) + 1

    def __len__(self) -> int:
        return len(self.elements)

    def append(self, g: ExcitationGenerator, slot: int | None = None) -> Ansatz:
        """New ansatz with ``g`` acting last; ``slot=None`` opens a new parameter."""
        slot = self.n_params if slot is None else slot
        return Ansatz(self.n_qubits, self.reference, self.elements + (g,), self.slots + (slot,))

    def resources(self) -> tuple[int, int]:
        """``(cnot_total, parameter_count)``."""
        return ansatz_resources(self.elements, self.slots)

    def check_parameters(self, theta: Sequence[float] | np.ndarray) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        if theta.shape != (self.n_params,):
            raise ValueError(f"Ansatz has {self.n_params} parameters, got shape {theta.shape}")
        return theta


@dataclass
class AnsatzObjective:
    """Energy and gradient of one ansatz against one Hamiltonian.

    The last evaluation is cached, so a line search asking for the value and
    then the gradient at the same point costs one sweep.
    """

    ansatz: Ansatz
    hamiltonian: sparse.csr_matrix
    evaluations: int = 0
    _last: tuple[bytes, float, np.ndarray] | None = field(default=None, repr=False)

    @classmethod
    def build(cls, ansatz: Ansatz, h: PauliSum) -> AnsatzObjective:
        return cls(ansatz, compile_operator(h, ansatz.n_qubits))

    def amplitudes(self, theta: np.ndarray) -> np.ndarray:
        a = self.ansatz
        psi = basis_state(a.reference, a.n_qubits).amplitudes
        for g, slot in zip(a.elements, a.slots):
            psi = rotate(g, float(theta[slot]), psi, a.n_qubits)
        return psi

    def energy(self, theta: np.ndarray) -> float:
        psi = self.amplitudes(theta)
        return float(np.vdot(psi, self.hamiltonian @ psi).real)

    def __call__(self, theta: Sequence[float] | np.ndarray) -> tuple[float, np.ndarray]:
        theta = self.ansatz.check_parameters(theta)
        key = theta.tobytes()
        if self._last is not None and self._last[0] == key:
            return self._last[1], self._last[2].copy()
        self.evaluations += 1
        a = self.ansatz
        psi = self.amplitudes(theta)
        costate = self.hamiltonian @ psi
        value = float(np.vdot(psi, costate).real)
        grad = np.zeros(a.n_params)
        for g, slot in zip(reversed(a.elements), reversed(a.slots)):
            angle = float(theta[slot])
            grad[slot] += 2.0 * np.vdot(costate, generator_action(g, psi, a.n_qubits)).real
            psi = rotate(g, -angle, psi, a.n_qubits)
            costate = rotate(g, -angle, costate, a.n_qubits)
        self._last = (key, value, grad)
        return value, grad.copy()


def prepare_state(a: Ansatz, theta: Sequence[float] | np.ndarray) -> StateVector:
    theta = a.check_parameters(theta)
    return StateVector(a.n_qubits, AnsatzObjective(a, sparse.csr_matrix((1, 1))).amplitudes(theta))


def energy(a: Ansatz, theta: Sequence[float] | np.ndarray, h: PauliSum) -> float:
    return AnsatzObjective.build(a, h)(theta)[0]


def gradient(a: Ansatz, theta: Sequence[float] | np.ndarray, h: PauliSum) -> np.ndarray:
    """``dE/dtheta_s`` per slot by one forward and one reverse sweep."""
    return AnsatzObjective.build(a, h)(theta)[1]
