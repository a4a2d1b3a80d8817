"""Dense statevectors, little-endian: qubit ``i`` is bit ``i`` of the basis index."""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from ..errors import ContractViolation
from ..excitations.generators import ExcitationGenerator
from ..models.enums import ExcitationKind
from ..operators.pauli import PauliSum

NORM_TOLERANCE = 1e-10
IMAGINARY_TOLERANCE = 1e-10


@dataclass(frozen=True, slots=True, eq=False)
class StateVector:
    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (1 << self.n_qubits,):
            raise ValueError(f"Expected {1 << self.n_qubits} amplitudes, got shape {self.amplitudes.shape}")

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def vdot(self, other: StateVector) -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def normalized(self) -> StateVector:
        return StateVector(self.n_qubits, self.amplitudes / self.norm())

    def with_amplitudes(self, amplitudes: np.ndarray) -> StateVector:
        return StateVector(self.n_qubits, amplitudes)


def basis_state(occupation: int, n_qubits: int) -> StateVector:
    if n_qubits < 0 or not 0 <= occupation < 1 << n_qubits:
        raise ValueError(f"Occupation {occupation:#b} does not fit {n_qubits} qubits")
    amplitudes = np.zeros(1 << n_qubits, dtype=np.complex128)
    amplitudes[occupation] = 1.0
    return StateVector(n_qubits, amplitudes)


@functools.lru_cache(maxsize=512)
def compile_operator(p: PauliSum, n_qubits: int) -> sparse.csr_matrix:
    """Sparse matrix of ``p`` on ``n_qubits``, cached per (operator, register)."""
    if p.n_qubits > n_qubits:
        raise IndexError(f"Operator acts on qubit {p.n_qubits - 1}, state has {n_qubits} qubits")
    return p.to_sparse(n_qubits)


def apply_pauli_sum(p: PauliSum, psi: StateVector) -> StateVector:
    """``p |psi>``, not normalized."""
    return psi.with_amplitudes(compile_operator(p, psi.n_qubits) @ psi.amplitudes)


def expectation(h: PauliSum, psi: StateVector) -> float:
    """``Re <psi|h|psi>`` for Hermitian ``h``."""
    if not h.is_hermitian():
        raise ContractViolation("Expectation needs a Hermitian operator (real coefficients)")
    value = np.vdot(psi.amplitudes, compile_operator(h, psi.n_qubits) @ psi.amplitudes)
    if abs(value.imag) > IMAGINARY_TOLERANCE:
        raise ContractViolation(f"Expectation of a Hermitian operator has imaginary part {value.imag:.3e}")
    return float(value.real)


def _derivative_scale(g: ExcitationGenerator) -> complex:
    return 1j if g.kind is ExcitationKind.PAULI_EXPONENTIAL else g.orientation


def generator_action(g: ExcitationGenerator, amplitudes: np.ndarray, n_qubits: int) -> np.ndarray:
    """``A psi`` where the element's unitary is ``exp(theta A)``.

    ``A = orientation * T`` for skew-Hermitian kinds and ``A = iP`` for
    Pauli-string exponentials; in both cases ``A^3 = -A``.
    """
    return _derivative_scale(g) * (compile_operator(g.generator, n_qubits) @ amplitudes)


def rotate(g: ExcitationGenerator, theta: float, amplitudes: np.ndarray, n_qubits: int) -> np.ndarray:
    """``exp(theta A) psi = psi + sin(theta) A psi + (1 - cos(theta)) A^2 psi`` on raw amplitudes."""
    if theta == 0.0:
        return amplitudes.copy()
    matrix = compile_operator(g.generator, n_qubits)
    scale = _derivative_scale(g)
    a_psi = scale * (matrix @ amplitudes)
    a2_psi = scale * (matrix @ a_psi)
    return amplitudes + np.sin(theta) * a_psi + (1.0 - np.cos(theta)) * a2_psi


def apply_excitation(g: ExcitationGenerator, theta: float, psi: StateVector) -> StateVector:
    if g.n_qubits > psi.n_qubits:
        raise IndexError(f"{g.label()} needs {g.n_qubits} qubits, state has {psi.n_qubits}")
    return psi.with_amplitudes(rotate(g, theta, psi.amplitudes, psi.n_qubits))
