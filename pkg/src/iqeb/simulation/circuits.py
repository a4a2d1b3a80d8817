"""Gate lists for ansatz elements, their statevector execution and OpenQASM text.

Rotations follow ``R_P(phi) = exp(-i phi P / 2)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from math import pi

import numpy as np

from ..excitations.generators import ExcitationGenerator
from ..models.enums import ExcitationKind, GateName
from .statevector import StateVector

QASM_HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'


@dataclass(frozen=True, slots=True)
class Gate:
    name: GateName
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self) -> None:
        arity = 2 if self.name is GateName.CX else 1
        if len(self.qubits) != arity:
            raise ValueError(f"{self.name.value} takes {arity} qubit(s), got {self.qubits}")
        if self.name is GateName.CX and self.qubits[0] == self.qubits[1]:
            raise ValueError(f"CNOT control and target coincide on qubit {self.qubits[0]}")
        if self.name.is_rotation != (self.angle is not None):
            raise ValueError(f"{self.name.value} angle mismatch: {self.angle}")

    def qasm(self) -> str:
        operands = ",".join(f"q[{q}]" for q in self.qubits)
        if self.angle is None:
            return f"{self.name.value} {operands};"
        return f"{self.name.value}({self.angle:.12g}) {operands};"


@dataclass(frozen=True)
class GateList:
    n_qubits: int
    gates: tuple[Gate, ...] = field(default=())

    def __post_init__(self) -> None:
        for gate in self.gates:
            if max(gate.qubits) >= self.n_qubits or min(gate.qubits) < 0:
                raise IndexError(f"{gate} outside a {self.n_qubits}-qubit register")

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __len__(self) -> int:
        return len(self.gates)

    def __add__(self, other: GateList) -> GateList:
        return GateList(max(self.n_qubits, other.n_qubits), self.gates + other.gates)

    @property
    def cnot_count(self) -> int:
        return sum(g.name is GateName.CX for g in self.gates)

    def to_qasm(self) -> str:
        lines = [QASM_HEADER + f"qreg q[{self.n_qubits}];"]
        lines.extend(g.qasm() for g in self.gates)
        return "\n".join(lines) + "\n"


def _rx(q: int, angle: float) -> Gate:
    return Gate(GateName.RX, (q,), angle)


def _ry(q: int, angle: float) -> Gate:
    return Gate(GateName.RY, (q,), angle)


def _rz(q: int, angle: float) -> Gate:
    return Gate(GateName.RZ, (q,), angle)


def _h(q: int) -> Gate:
    return Gate(GateName.H, (q,))


def _x(q: int) -> Gate:
    return Gate(GateName.X, (q,))


def _cx(control: int, target: int) -> Gate:
    return Gate(GateName.CX, (control, target))


def _single_circuit(i: int, k: int, theta: float) -> list[Gate]:
    """``exp(theta/2 * i (X_i Y_k - Y_i X_k))`` with two CNOTs."""
    return [
        _rz(k, pi / 2),
        _rx(k, pi / 2),
        _rx(i, pi / 2),
        _cx(k, i),
        _rx(k, theta),
        _rz(i, theta),
        _cx(k, i),
        _rx(k, -pi / 2),
        _rx(i, -pi / 2),
        _rz(k, -pi / 2),
    ]


def _double_circuit(i: int, j: int, k: int, l: int, theta: float) -> list[Gate]:
    """Rotation between ``|1_i 1_j 0_k 0_l>`` and ``|0_i 0_j 1_k 1_l>`` with 13 CNOTs.

    The parity ladder maps both states onto ``i = j = k = 1``, where a
    triply-controlled ``Ry(-2 theta)`` on ``l`` is spelled with eight CNOTs.
    Equal to ``exp(theta T)`` up to a global phase.
    """
    q = theta / 4
    return [
        _cx(l, k),
        _cx(j, i),
        _x(k),
        _x(i),
        _cx(l, j),
        _ry(l, -q),
        _h(k),
        _cx(l, k),
        _ry(l, q),
        _h(i),
        _cx(l, i),
        _ry(l, -q),
        _cx(l, k),
        _ry(l, q),
        _h(j),
        _cx(l, j),
        _ry(l, -q),
        _cx(l, k),
        _ry(l, q),
        _cx(l, i),
        _ry(l, -q),
        _h(i),
        _cx(l, k),
        _ry(l, q),
        _h(k),
        _rz(j, -pi / 2),
        _cx(l, j),
        _rz(l, pi / 2),
        _rz(j, -pi / 2),
        _x(k),
        _ry(j, pi / 2),
        _x(i),
        _cx(l, k),
        _cx(j, i),
    ]


def _staircase_circuit(qubits: tuple[int, ...], letters: str, theta: float) -> list[Gate]:
    """``exp(i theta P)`` via basis change, CNOT parity ladder and one Rz."""
    basis = [_h(q) if a == "X" else _rx(q, pi / 2) for q, a in zip(qubits, letters)]
    undo = [_h(q) if a == "X" else _rx(q, -pi / 2) for q, a in zip(qubits, letters)]
    ladder = [_cx(a, b) for a, b in zip(qubits, qubits[1:])]
    return basis + ladder + [_rz(qubits[-1], -2 * theta)] + ladder[::-1] + undo


def emit_circuit(g: ExcitationGenerator, theta: float, n_qubits: int | None = None) -> GateList:
    """Gate list of ``g`` at angle ``theta``; fermionic kinds are cost-modeled only."""
    n = g.n_qubits if n_qubits is None else n_qubits
    angle = g.orientation * theta
    match g.kind:
        case ExcitationKind.QUBIT_SINGLE:
            gates = _single_circuit(*g.indices, angle)
        case ExcitationKind.QUBIT_DOUBLE:
            gates = _double_circuit(*g.indices, angle)
        case ExcitationKind.PAULI_EXPONENTIAL:
            assert g.letters is not None
            gates = _staircase_circuit(g.indices, g.letters, theta)
        case _:
            raise NotImplementedError(f"No circuit construction for {g.kind.value} elements")
    return GateList(n, tuple(gates))


def emit_ansatz(elements: Iterable[tuple[ExcitationGenerator, float]], n_qubits: int) -> GateList:
    """Concatenated circuits of ``(element, angle)`` pairs in application order."""
    gates: list[Gate] = []
    for g, theta in elements:
        gates.extend(emit_circuit(g, theta, n_qubits).gates)
    return GateList(n_qubits, tuple(gates))


# ---- execution ----------------------------------------------------------

_H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)
_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)


def _matrix(gate: Gate) -> np.ndarray:
    match gate.name:
        case GateName.H:
            return _H
        case GateName.X:
            return _X
    c, s = np.cos(gate.angle / 2), np.sin(gate.angle / 2)
    match gate.name:
        case GateName.RX:
            return np.array([[c, -1j * s], [-1j * s, c]])
        case GateName.RY:
            return np.array([[c, -s], [s, c]], dtype=np.complex128)
        case _:
            return np.array([[c - 1j * s, 0], [0, c + 1j * s]])


def _apply_one(matrix: np.ndarray, q: int, amplitudes: np.ndarray, n: int) -> np.ndarray:
    view = amplitudes.reshape(1 << (n - q - 1), 2, 1 << q)
    return np.einsum("ab,ibj->iaj", matrix, view).reshape(-1)


def _apply_cx(control: int, target: int, amplitudes: np.ndarray) -> np.ndarray:
    index = np.arange(amplitudes.size)
    flipped = np.where(index >> control & 1, index ^ (1 << target), index)
    return amplitudes[flipped]


def apply_gate_list(gates: GateList, psi: StateVector) -> StateVector:
    """Run ``gates`` gate by gate on ``psi``."""
    if gates.n_qubits > psi.n_qubits:
        raise IndexError(f"Circuit needs {gates.n_qubits} qubits, state has {psi.n_qubits}")
    n = psi.n_qubits
    amplitudes = psi.amplitudes.copy()
    for gate in gates:
        if gate.name is GateName.CX:
            amplitudes = _apply_cx(*gate.qubits, amplitudes)
        else:
            amplitudes = _apply_one(_matrix(gate), gate.qubits[0], amplitudes, n)
    return psi.with_amplitudes(amplitudes)
