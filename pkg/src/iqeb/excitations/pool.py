"""Ansatz-element pools and circuit resource tallies."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from math import comb

from ..models.enums import PoolKind
from .generators import (
    ExcitationGenerator,
    fermionic_double,
    fermionic_single,
    pauli_exponential_generator,
    qubit_double,
    qubit_single,
    spin_complement,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PoolGroup:
    """Pool elements driven by one shared parameter, ``signs`` relative to it."""

    members: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.members) != len(self.signs) or not self.members:
            raise ValueError("A pool group needs one sign per member")


@dataclass(frozen=True)
class ExcitationPool:
    kind: PoolKind
    n_qubits: int
    elements: tuple[ExcitationGenerator, ...]
    groups: tuple[PoolGroup, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, index: int) -> ExcitationGenerator:
        return self.elements[index]

    @property
    def pairing(self) -> tuple[PoolGroup, ...] | None:
        """Spin-complement groupings, only for the shared-parameter pool."""
        return self.groups if self.kind is PoolKind.FERMIONIC_PAIRS else None

    def index(self, element: ExcitationGenerator) -> int:
        for n, candidate in enumerate(self.elements):
            if candidate.key == element.key:
                return n
        raise KeyError(element.label())


def expected_pool_size(kind: PoolKind, n_qubits: int) -> int:
    if kind is PoolKind.PAULI_EXPONENTIAL:
        return 2 * comb(n_qubits, 2) + 8 * comb(n_qubits, 4)
    return comb(n_qubits, 2) + 3 * comb(n_qubits, 4)


def _excitation_elements(n: int, fermionic: bool) -> list[ExcitationGenerator]:
    single, double = (fermionic_single, fermionic_double) if fermionic else (qubit_single, qubit_double)
    singles = [single(i, k, n) for i, k in itertools.combinations(range(n), 2)]
    doubles = []
    for a, b, c, d in itertools.combinations(range(n), 4):
        doubles.extend(double(*idx, n) for idx in ((a, b, c, d), (a, c, b, d), (a, d, b, c)))
    doubles.sort(key=lambda g: g.indices)
    return singles + doubles


def _pauli_elements(n: int) -> list[ExcitationGenerator]:
    elements = []
    for size in (2, 4):
        for qubits in itertools.combinations(range(n), size):
            for word in itertools.product("XY", repeat=size):
                if word.count("Y") % 2:
                    elements.append(pauli_exponential_generator(dict(zip(qubits, word))))
    return elements


def _pair_groups(elements: Sequence[ExcitationGenerator]) -> tuple[PoolGroup, ...]:
    position = {g.key: n for n, g in enumerate(elements)}
    seen: set[int] = set()
    groups = []
    for n, g in enumerate(elements):
        if n in seen:
            continue
        partner = spin_complement(g)
        m = position[partner.key]
        if m == n:
            groups.append(PoolGroup((n,), (1,)))
            seen.add(n)
        else:
            groups.append(PoolGroup((n, m), (1, partner.orientation)))
            seen.update((n, m))
    return tuple(groups)


def build_pool(kind: PoolKind, n_qubits: int) -> ExcitationPool:
    """All unique singles and doubles (or odd-Y X/Y strings) on ``n_qubits``.

    Singles come before doubles, each in lexicographic index order.
    """
    if n_qubits < 4:
        raise ValueError(f"Pools with double excitations need at least 4 qubits, got {n_qubits}")
    match kind:
        case PoolKind.QUBIT:
            elements = _excitation_elements(n_qubits, fermionic=False)
        case PoolKind.FERMIONIC | PoolKind.FERMIONIC_PAIRS:
            elements = _excitation_elements(n_qubits, fermionic=True)
        case PoolKind.PAULI_EXPONENTIAL:
            elements = _pauli_elements(n_qubits)
        case _:
            raise NotImplementedError(f"Unknown pool kind {kind!r}")
    if kind is PoolKind.FERMIONIC_PAIRS:
        groups = _pair_groups(elements)
    else:
        groups = tuple(PoolGroup((n,), (1,)) for n in range(len(elements)))
    pool = ExcitationPool(kind, n_qubits, tuple(elements), groups)
    log.debug("Built pool", extra={"kind": kind.value, "n_qubits": n_qubits, "size": len(pool)})
    return pool


def ansatz_resources(elements: Sequence[ExcitationGenerator], slots: Sequence[int] | None = None) -> tuple[int, int]:
    """``(cnot_total, parameter_count)``; elements sharing a slot count one parameter."""
    if slots is None:
        slots = range(len(elements))
    elif len(slots) != len(elements):
        raise ValueError(f"{len(elements)} elements but {len(slots)} slots")
    return sum(g.cnot_cost for g in elements), len(set(slots))
