"""Excitation generators.

Skew-Hermitian kinds store the canonical generator ``T`` built from ladder
operators, ``Q+ = (X - iY)/2`` for qubit excitations and the Jordan-Wigner
images of ``a+`` for fermionic ones:

- single ``(i, k)``, ``i < k``:           ``T = O+_i O_k - O+_k O_i``
- double ``(i, j, k, l)``, ``i < j``, ``k < l``, ``(i, j) < (k, l)``:
  ``T = O+_i O+_j O_k O_l - O+_k O+_l O_i O_j``

The index order a caller asked for maps to the canonical one up to a sign,
kept in :attr:`ExcitationGenerator.orientation`; the element's unitary is
``exp(orientation * theta * T)``. Pauli-string exponentials store ``P`` and
act as ``exp(i * theta * P)``.
"""

from __future__ import annotations

import functools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from ..models.enums import ExcitationKind
from ..operators.fermion import FermionOperator, jw_transform
from ..operators.pauli import PauliString, PauliSum

QUBIT_SINGLE_CNOTS = 2
QUBIT_DOUBLE_CNOTS = 13


@dataclass(frozen=True)
class ExcitationGenerator:
    kind: ExcitationKind
    indices: tuple[int, ...]
    orientation: int = 1
    letters: str | None = None
    generator: PauliSum = field(default_factory=PauliSum, compare=False, repr=False)
    cnot_cost: int = field(default=0, compare=False)

    @property
    def key(self) -> tuple[ExcitationKind, tuple[int, ...], str | None]:
        """Identity of the element regardless of orientation."""
        return self.kind, self.indices, self.letters

    @property
    def is_single(self) -> bool:
        return len(self.indices) == 2

    @property
    def n_qubits(self) -> int:
        """Smallest register the generator fits in, Z strings included."""
        return max(self.generator.n_qubits, max(self.indices) + 1)

    def oriented(self) -> PauliSum:
        """``orientation * generator``."""
        return self.generator if self.orientation == 1 else -self.generator

    def label(self) -> str:
        if self.letters:
            body = "".join(f"{a}{i}" for a, i in zip(self.letters, self.indices))
        else:
            body = ",".join(str(i) for i in self.indices)
        sign = "-" if self.orientation < 0 else ""
        return f"{sign}{self.kind.value}({body})"

    def __str__(self) -> str:
        return self.label()


# ---- ladder encodings ---------------------------------------------------


def _q(i: int, creation: bool) -> PauliSum:
    sign = -0.5j if creation else 0.5j
    return PauliSum([(0.5, PauliString(1 << i, 0)), (sign, PauliString(1 << i, 1 << i))])


@functools.lru_cache(maxsize=4096)
def _qubit_single_sum(i: int, k: int) -> PauliSum:
    return _q(i, True) * _q(k, False) - _q(k, True) * _q(i, False)


@functools.lru_cache(maxsize=16384)
def _qubit_double_sum(i: int, j: int, k: int, l: int) -> PauliSum:
    forward = _q(i, True) * _q(j, True) * _q(k, False) * _q(l, False)
    backward = _q(k, True) * _q(l, True) * _q(i, False) * _q(j, False)
    return forward - backward


@functools.lru_cache(maxsize=4096)
def _fermionic_single_sum(i: int, k: int) -> PauliSum:
    op = FermionOperator.product((i, True), (k, False)) - FermionOperator.product((k, True), (i, False))
    return jw_transform(op, max(i, k) + 1)


@functools.lru_cache(maxsize=16384)
def _fermionic_double_sum(i: int, j: int, k: int, l: int) -> PauliSum:
    op = FermionOperator.product((i, True), (j, True), (k, False), (l, False)) - FermionOperator.product(
        (k, True), (l, True), (i, False), (j, False)
    )
    return jw_transform(op, max(i, j, k, l) + 1)


# ---- canonical forms ----------------------------------------------------


def _check_distinct(indices: Sequence[int]) -> None:
    if any(i < 0 for i in indices):
        raise ValueError(f"Negative index in {tuple(indices)}")
    if len(set(indices)) != len(indices):
        raise ValueError(f"Excitation indices must be distinct, got {tuple(indices)}")


def _canonical_single(i: int, k: int) -> tuple[tuple[int, int], int]:
    return ((i, k), 1) if i < k else ((k, i), -1)


def _canonical_double(i: int, j: int, k: int, l: int, swap_sign: int) -> tuple[tuple[int, int, int, int], int]:
    """Sort each pair (``swap_sign`` per within-pair swap) and put the smaller pair first (-1)."""
    sign = 1
    creation, annihilation = (i, j), (k, l)
    if i > j:
        creation, sign = (j, i), sign * swap_sign
    if k > l:
        annihilation, sign = (l, k), sign * swap_sign
    if annihilation < creation:
        creation, annihilation, sign = annihilation, creation, -sign
    return creation + annihilation, sign


def _check_register(indices: Sequence[int], n_qubits: int | None) -> None:
    if n_qubits is not None and max(indices) >= n_qubits:
        raise IndexError(f"Indices {tuple(indices)} do not fit {n_qubits} qubits")


# ---- constructors -------------------------------------------------------


def qubit_single(i: int, k: int, n_qubits: int | None = None) -> ExcitationGenerator:
    _check_distinct((i, k))
    _check_register((i, k), n_qubits)
    (a, b), sign = _canonical_single(i, k)
    return ExcitationGenerator(
        ExcitationKind.QUBIT_SINGLE, (a, b), sign, generator=_qubit_single_sum(a, b), cnot_cost=QUBIT_SINGLE_CNOTS
    )


def qubit_double(i: int, j: int, k: int, l: int, n_qubits: int | None = None) -> ExcitationGenerator:
    _check_distinct((i, j, k, l))
    _check_register((i, j, k, l), n_qubits)
    canonical, sign = _canonical_double(i, j, k, l, swap_sign=1)
    return ExcitationGenerator(
        ExcitationKind.QUBIT_DOUBLE,
        canonical,
        sign,
        generator=_qubit_double_sum(*canonical),
        cnot_cost=QUBIT_DOUBLE_CNOTS,
    )


def fermionic_single_cost(i: int, k: int) -> int:
    lo, hi = sorted((i, k))
    return 2 * (hi - lo) + 1


def fermionic_double_cost(i: int, j: int, k: int, l: int) -> int:
    a, b, c, d = sorted((i, j, k, l))
    return 2 * (d + b - a - c) + 9


def fermionic_single(i: int, k: int, n_qubits: int | None = None) -> ExcitationGenerator:
    _check_distinct((i, k))
    _check_register((i, k), n_qubits)
    (a, b), sign = _canonical_single(i, k)
    return ExcitationGenerator(
        ExcitationKind.FERMIONIC_SINGLE,
        (a, b),
        sign,
        generator=_fermionic_single_sum(a, b),
        cnot_cost=fermionic_single_cost(a, b),
    )


def fermionic_double(i: int, j: int, k: int, l: int, n_qubits: int | None = None) -> ExcitationGenerator:
    _check_distinct((i, j, k, l))
    _check_register((i, j, k, l), n_qubits)
    canonical, sign = _canonical_double(i, j, k, l, swap_sign=-1)
    return ExcitationGenerator(
        ExcitationKind.FERMIONIC_DOUBLE,
        canonical,
        sign,
        generator=_fermionic_double_sum(*canonical),
        cnot_cost=fermionic_double_cost(*canonical),
    )


def pauli_exponential_generator(letters: Mapping[int, str] | str) -> ExcitationGenerator:
    """Element ``exp(i theta P)`` for an X/Y string with an odd number of Ys.

    ``letters`` is ``{qubit: "X" | "Y"}`` or a label such as ``"X0 Y1"``.
    """
    if isinstance(letters, str):
        letters = PauliString.parse(letters).factors
    if len(letters) not in (2, 4):
        raise ValueError(f"Pauli-string exponentials act on 2 or 4 qubits, got {len(letters)}")
    if any(a not in ("X", "Y") for a in letters.values()):
        raise ValueError(f"Only X and Y letters are allowed, got {dict(letters)}")
    if sum(a == "Y" for a in letters.values()) % 2 == 0:
        raise ValueError(f"Pauli string {dict(letters)} needs an odd number of Y letters")
    qubits = tuple(sorted(letters))
    _check_distinct(qubits)
    word = "".join(letters[q] for q in qubits)
    return ExcitationGenerator(
        ExcitationKind.PAULI_EXPONENTIAL,
        qubits,
        1,
        letters=word,
        generator=PauliSum.from_string(PauliString.from_factors(letters)),
        cnot_cost=2 * (len(qubits) - 1),
    )


_BUILDERS = {
    ExcitationKind.QUBIT_SINGLE: qubit_single,
    ExcitationKind.QUBIT_DOUBLE: qubit_double,
    ExcitationKind.FERMIONIC_SINGLE: fermionic_single,
    ExcitationKind.FERMIONIC_DOUBLE: fermionic_double,
}


def make_generator(
    kind: ExcitationKind, indices: Sequence[int], letters: str | None = None, orientation: int = 1
) -> ExcitationGenerator:
    """Rebuild an element from its recorded ``(kind, indices, letters, orientation)``."""
    if kind is ExcitationKind.PAULI_EXPONENTIAL:
        if letters is None or len(letters) != len(indices):
            raise ValueError("Pauli-string exponentials need one letter per index")
        return pauli_exponential_generator(dict(zip(indices, letters)))
    g = _BUILDERS[kind](*indices)
    if orientation not in (1, -1):
        raise ValueError(f"Orientation must be +1 or -1, got {orientation}")
    if orientation != 1:
        g = ExcitationGenerator(g.kind, g.indices, g.orientation * orientation, None, g.generator, g.cnot_cost)
    return g


def spin_partner(index: int) -> int:
    """Opposite-spin spin-orbital under the interleaved ordering."""
    return index ^ 1


def spin_complement(g: ExcitationGenerator) -> ExcitationGenerator:
    """Same excitation on the opposite-spin orbitals.

    The canonical indices are mapped in their creation/annihilation roles and
    re-canonicalized; the resulting sign composes with ``g.orientation``.
    """
    if g.kind is ExcitationKind.PAULI_EXPONENTIAL:
        raise ValueError("Pauli-string exponentials have no spin complement")
    mapped = _BUILDERS[g.kind](*(spin_partner(i) for i in g.indices))
    return ExcitationGenerator(
        mapped.kind,
        mapped.indices,
        mapped.orientation * g.orientation,
        None,
        mapped.generator,
        mapped.cnot_cost,
    )


def is_self_complement(g: ExcitationGenerator) -> bool:
    """True when the complement acts on the same canonical indices."""
    return g.kind is not ExcitationKind.PAULI_EXPONENTIAL and spin_complement(g).key == g.key
