"""Second-quantized electronic Hamiltonian and its Jordan-Wigner image.

Spin-orbitals are interleaved: spatial orbital ``p`` gives spin-orbital ``2p``
(alpha) and ``2p + 1`` (beta). Qubit ``i`` holds spin-orbital ``i``.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

import numpy as np

from ..errors import IntegralIntegrityError
from .pauli import IDENTITY, PauliString, PauliSum, mul_strings

log = logging.getLogger(__name__)

SYMMETRY_TOLERANCE = 1e-10

type Ladder = tuple[int, bool]
type LadderTerm = tuple[complex, tuple[Ladder, ...]]


@dataclass(frozen=True, eq=False)
class MolecularIntegrals:
    """Spatial-orbital integrals in chemists' notation, energies in Hartree."""

    n_spatial: int
    n_electrons: int
    ms2: int
    core_energy: float
    one_body: np.ndarray
    two_body: np.ndarray
    orbsym: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        n = self.n_spatial
        if n < 1:
            raise ValueError(f"Need at least one spatial orbital, got {n}")
        if not 0 < self.n_electrons <= 2 * n:
            raise ValueError(f"Electron count {self.n_electrons} outside (0, {2 * n}]")
        if self.one_body.shape != (n, n) or self.two_body.shape != (n, n, n, n):
            raise ValueError(
                f"Integral tables have shapes {self.one_body.shape}, {self.two_body.shape} for {n} orbitals"
            )
        h, g = self.one_body, self.two_body
        if not np.allclose(h, h.T, rtol=0.0, atol=SYMMETRY_TOLERANCE):
            raise IntegralIntegrityError("One-body integrals are not symmetric")
        for perm in ((1, 0, 2, 3), (0, 1, 3, 2), (2, 3, 0, 1)):
            if not np.allclose(g, g.transpose(perm), rtol=0.0, atol=SYMMETRY_TOLERANCE):
                raise IntegralIntegrityError(f"Two-body integrals break the (pq|rs) symmetry {perm}")

    @property
    def n_spin_orbitals(self) -> int:
        return 2 * self.n_spatial

    n_qubits = n_spin_orbitals

    def hartree_fock_energy(self) -> float:
        """Determinant energy of the lowest ``n_electrons`` spin-orbitals, core included."""
        occupied = range(self.n_electrons)
        h, g = self.one_body, self.two_body
        energy = self.core_energy + sum(h[s // 2, s // 2] for s in occupied)
        for s, t in itertools.product(occupied, repeat=2):
            p, q = s // 2, t // 2
            energy += 0.5 * g[p, p, q, q]
            if s % 2 == t % 2:
                energy -= 0.5 * g[p, q, q, p]
        return float(energy)


class FermionOperator:
    """Weighted sum of ladder-operator products, kept exactly as written.

    A ladder is ``(spin_orbital, is_creation)``; the empty sequence is identity.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[LadderTerm] = ()):
        self._terms: tuple[LadderTerm, ...] = tuple(
            (complex(c), tuple((int(i), bool(dag)) for i, dag in seq)) for c, seq in terms
        )

    @classmethod
    def identity(cls, coeff: complex = 1.0) -> FermionOperator:
        return cls([(coeff, ())])

    @classmethod
    def product(cls, *ladders: Ladder, coeff: complex = 1.0) -> FermionOperator:
        return cls([(coeff, ladders)])

    @property
    def terms(self) -> tuple[LadderTerm, ...]:
        return self._terms

    @property
    def n_modes(self) -> int:
        return max((i + 1 for _, seq in self._terms for i, _ in seq), default=0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[LadderTerm]:
        return iter(self._terms)

    def __add__(self, other: FermionOperator) -> FermionOperator:
        return FermionOperator(self._terms + other._terms)

    def __neg__(self) -> FermionOperator:
        return FermionOperator((-c, seq) for c, seq in self._terms)

    def __sub__(self, other: FermionOperator) -> FermionOperator:
        return self + (-other)

    def __mul__(self, other: FermionOperator | complex) -> FermionOperator:
        if isinstance(other, FermionOperator):
            return FermionOperator((ca * cb, sa + sb) for ca, sa in self._terms for cb, sb in other._terms)
        return FermionOperator((c * other, seq) for c, seq in self._terms)

    def __rmul__(self, other: complex) -> FermionOperator:
        return self * other

    def adjoint(self) -> FermionOperator:
        return FermionOperator(
            (c.conjugate(), tuple((i, not dag) for i, dag in reversed(seq))) for c, seq in self._terms
        )

    def __repr__(self) -> str:
        return f"FermionOperator({len(self._terms)} terms)"


def hartree_fock_reference(n_electrons: int, n_qubits: int) -> int:
    """Occupation bitmask with qubits ``0..n_electrons-1`` set."""
    if not 0 < n_electrons <= n_qubits:
        raise ValueError(f"Need 0 < n_electrons <= n_qubits, got {n_electrons} and {n_qubits}")
    return (1 << n_electrons) - 1


def build_molecular_hamiltonian(ints: MolecularIntegrals) -> FermionOperator:
    """``core + sum h_pq a+_p a_q + 1/2 sum (pq|rs) a+_p a+_r a_s a_q`` over spin-orbitals."""
    n = ints.n_spatial
    terms: list[LadderTerm] = []
    if ints.core_energy:
        terms.append((ints.core_energy, ()))
    for p, q in itertools.product(range(n), repeat=2):
        h = ints.one_body[p, q]
        if h == 0:
            continue
        for sigma in (0, 1):
            terms.append((h, ((2 * p + sigma, True), (2 * q + sigma, False))))
    for p, q, r, s in itertools.product(range(n), repeat=4):
        g = ints.two_body[p, q, r, s]
        if g == 0:
            continue
        for sigma, tau in itertools.product((0, 1), repeat=2):
            i, j, k, l = 2 * p + sigma, 2 * r + tau, 2 * s + tau, 2 * q + sigma
            if i == j or k == l:
                continue
            terms.append((0.5 * g, ((i, True), (j, True), (k, False), (l, False))))
    return FermionOperator(terms)


def _ladder_terms(i: int, creation: bool) -> tuple[tuple[complex, PauliString], ...]:
    parity = (1 << i) - 1
    sign = -1 if creation else 1
    return (
        (0.5, PauliString(1 << i, parity)),
        (sign * 0.5j, PauliString(1 << i, parity | 1 << i)),
    )


def jw_ladder(i: int, creation: bool, n_qubits: int) -> PauliSum:
    """``1/2 (X_i -/+ i Y_i) Z_{i-1} ... Z_0`` for creation/annihilation."""
    if not 0 <= i < n_qubits:
        raise IndexError(f"Spin-orbital {i} outside a {n_qubits}-qubit register")
    return PauliSum(_ladder_terms(i, creation))


def jw_transform(op: FermionOperator, n_qubits: int) -> PauliSum:
    """Substitute the ladder encodings into every product and simplify."""
    if op.n_modes > n_qubits:
        raise IndexError(f"Operator acts on {op.n_modes} modes, register has {n_qubits} qubits")
    total: dict[PauliString, complex] = {}
    for coeff, seq in op:
        acc: dict[PauliString, complex] = {IDENTITY: coeff}
        for i, creation in seq:
            nxt: dict[PauliString, complex] = {}
            for s, c in acc.items():
                for lc, ls in _ladder_terms(i, creation):
                    phase, prod = mul_strings(s, ls)
                    nxt[prod] = nxt.get(prod, 0j) + c * lc * phase
            acc = nxt
        for s, c in acc.items():
            total[s] = total.get(s, 0j) + c
    result = PauliSum(total).simplify()
    log.debug("Jordan-Wigner transform", extra={"fermion_terms": len(op), "pauli_terms": len(result)})
    return result


def qubit_hamiltonian(ints: MolecularIntegrals) -> PauliSum:
    """JW image of :func:`build_molecular_hamiltonian` on ``2 * n_spatial`` qubits."""
    return jw_transform(build_molecular_hamiltonian(ints), ints.n_spin_orbitals)
