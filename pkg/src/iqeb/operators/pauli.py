"""Exact algebra on Pauli strings and weighted Pauli sums.

A :class:`PauliString` is stored in symplectic form: bit ``q`` of ``x`` marks an
X or Y factor on qubit ``q`` and bit ``q`` of ``z`` marks a Z or Y factor.
Products are XORs of the masks plus a phase read off the letter overlaps.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from typing import Literal

import numpy as np
from scipy import sparse

type Letter = Literal["X", "Y", "Z"]
type Term = tuple[complex, PauliString]

SIMPLIFY_FLOOR = 1e-12

_LETTER_BITS: dict[str, tuple[int, int]] = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_PHASES = (1 + 0j, 1j, -1 + 0j, -1j)
_TOKEN = re.compile(r"([XYZ])(\d+)")


class PauliString:
    """Tensor product of X, Y, Z factors; absent qubits carry identity."""

    __slots__ = ("_x", "_z", "_key")

    def __init__(self, x: int = 0, z: int = 0):
        if x < 0 or z < 0:
            raise ValueError("Pauli masks must be non-negative")
        self._x = x
        self._z = z
        self._key: tuple[tuple[int, str], ...] | None = None

    @classmethod
    def from_factors(cls, factors: Mapping[int, str]) -> PauliString:
        x = z = 0
        for qubit, letter in factors.items():
            if qubit < 0:
                raise ValueError(f"Negative qubit index {qubit}")
            if letter == "I":
                continue
            try:
                bx, bz = _LETTER_BITS[letter]
            except KeyError:
                raise ValueError(f"Unknown Pauli letter {letter!r}") from None
            x |= bx << qubit
            z |= bz << qubit
        return cls(x, z)

    @classmethod
    def parse(cls, label: str) -> PauliString:
        """Parse labels such as ``"X0 Y1"``, ``"X0Z3"`` or ``"I"``."""
        compact = label.replace(" ", "")
        if compact in ("", "I"):
            return cls()
        factors: dict[int, str] = {}
        pos = 0
        for match in _TOKEN.finditer(compact):
            if match.start() != pos:
                raise ValueError(f"Cannot parse Pauli label {label!r}")
            qubit = int(match.group(2))
            if qubit in factors:
                raise ValueError(f"Qubit {qubit} repeated in {label!r}")
            factors[qubit] = match.group(1)
            pos = match.end()
        if pos != len(compact):
            raise ValueError(f"Cannot parse Pauli label {label!r}")
        return cls.from_factors(factors)

    @property
    def x(self) -> int:
        return self._x

    @property
    def z(self) -> int:
        return self._z

    @property
    def support(self) -> int:
        return self._x | self._z

    @property
    def qubits(self) -> tuple[int, ...]:
        support = self.support
        return tuple(q for q in range(support.bit_length()) if support >> q & 1)

    @property
    def factors(self) -> dict[int, Letter]:
        return dict(self.sort_key)  # type: ignore[arg-type]

    @property
    def weight(self) -> int:
        return self.support.bit_count()

    @property
    def n_y(self) -> int:
        return (self._x & self._z).bit_count()

    @property
    def is_identity(self) -> bool:
        return self.support == 0

    @property
    def n_qubits(self) -> int:
        """Smallest register holding every factor."""
        return self.support.bit_length()

    @property
    def sort_key(self) -> tuple[tuple[int, str], ...]:
        if self._key is None:
            letters = []
            for q in self.qubits:
                bx, bz = self._x >> q & 1, self._z >> q & 1
                letters.append((q, "Y" if bx and bz else ("X" if bx else "Z")))
            self._key = tuple(letters)
        return self._key

    def commutes_with(self, other: PauliString) -> bool:
        overlap = (self._x & other._z).bit_count() + (self._z & other._x).bit_count()
        return overlap % 2 == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliString):
            return NotImplemented
        return self._x == other._x and self._z == other._z

    def __hash__(self) -> int:
        return hash((self._x, self._z))

    def __lt__(self, other: PauliString) -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        if self.is_identity:
            return "I"
        return " ".join(f"{letter}{q}" for q, letter in self.sort_key)

    def __repr__(self) -> str:
        return f"PauliString({str(self)!r})"


IDENTITY = PauliString()


def mul_strings(a: PauliString, b: PauliString) -> tuple[complex, PauliString]:
    """Return ``(phase, product)`` with ``phase * product == a @ b``."""
    xa, za, xb, zb = a.x, a.z, b.x, b.z
    a_x, a_y, a_z = xa & ~za, xa & za, ~xa & za
    b_x, b_y, b_z = xb & ~zb, xb & zb, ~xb & zb
    plus = (a_x & b_y).bit_count() + (a_y & b_z).bit_count() + (a_z & b_x).bit_count()
    minus = (a_x & b_z).bit_count() + (a_y & b_x).bit_count() + (a_z & b_y).bit_count()
    return _PHASES[(plus - minus) % 4], PauliString(xa ^ xb, za ^ zb)


class PauliSum:
    """Immutable weighted sum of Pauli strings in canonical (lexicographic) order.

    Arithmetic results are simplified with :data:`SIMPLIFY_FLOOR`; the raw
    constructor only merges duplicates and drops exact zeros.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Iterable[Term] | Mapping[PauliString, complex] = ()):
        items = terms.items() if isinstance(terms, Mapping) else ((s, c) for c, s in terms)
        merged: dict[PauliString, complex] = {}
        for string, coeff in items:
            merged[string] = merged.get(string, 0j) + complex(coeff)
        self._terms: dict[PauliString, complex] = {
            s: merged[s] for s in sorted(merged, key=lambda s: s.sort_key) if merged[s] != 0
        }
        self._hash: int | None = None

    # ---- constructors -------------------------------------------------

    @classmethod
    def identity(cls, coeff: complex = 1.0) -> PauliSum:
        return cls([(coeff, IDENTITY)])

    @classmethod
    def from_string(cls, string: PauliString | str, coeff: complex = 1.0) -> PauliSum:
        if isinstance(string, str):
            string = PauliString.parse(string)
        return cls([(coeff, string)])

    @classmethod
    def from_labels(cls, labels: Mapping[str, complex]) -> PauliSum:
        return cls([(c, PauliString.parse(label)) for label, c in labels.items()])

    # ---- views --------------------------------------------------------

    @property
    def terms(self) -> tuple[Term, ...]:
        return tuple((c, s) for s, c in self._terms.items())

    def coefficient(self, string: PauliString | str) -> complex:
        if isinstance(string, str):
            string = PauliString.parse(string)
        return self._terms.get(string, 0j)

    @property
    def n_qubits(self) -> int:
        return max((s.n_qubits for s in self._terms), default=0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_hermitian(self, atol: float = SIMPLIFY_FLOOR) -> bool:
        return all(abs(c.imag) <= atol for c in self._terms.values())

    # ---- algebra ------------------------------------------------------

    def simplify(self, floor: float = SIMPLIFY_FLOOR) -> PauliSum:
        if floor < 0:
            raise ValueError("Simplification floor must be non-negative")
        return PauliSum({s: c for s, c in self._terms.items() if abs(c) >= floor})

    def scale(self, scalar: complex) -> PauliSum:
        return PauliSum({s: c * scalar for s, c in self._terms.items()}).simplify()

    def adjoint(self) -> PauliSum:
        return PauliSum({s: c.conjugate() for s, c in self._terms.items()})

    def __add__(self, other: PauliSum | complex) -> PauliSum:
        other = _coerce(other)
        merged = dict(self._terms)
        for s, c in other._terms.items():
            merged[s] = merged.get(s, 0j) + c
        return PauliSum(merged).simplify()

    __radd__ = __add__

    def __neg__(self) -> PauliSum:
        return PauliSum({s: -c for s, c in self._terms.items()})

    def __sub__(self, other: PauliSum | complex) -> PauliSum:
        return self + (-_coerce(other))

    def __rsub__(self, other: complex) -> PauliSum:
        return _coerce(other) - self

    def __mul__(self, other: PauliSum | complex) -> PauliSum:
        if not isinstance(other, PauliSum):
            return self.scale(other)
        product: dict[PauliString, complex] = {}
        for sa, ca in self._terms.items():
            for sb, cb in other._terms.items():
                phase, s = mul_strings(sa, sb)
                product[s] = product.get(s, 0j) + phase * ca * cb
        return PauliSum(product).simplify()

    def __rmul__(self, other: complex) -> PauliSum:
        return self.scale(other)

    def __truediv__(self, scalar: complex) -> PauliSum:
        return self.scale(1 / scalar)

    # ---- comparison ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple((s, c) for s, c in self._terms.items()))
        return self._hash

    def isclose(self, other: PauliSum, atol: float = SIMPLIFY_FLOOR) -> bool:
        return not (self - other).simplify(atol)

    def __repr__(self) -> str:
        if not self._terms:
            return "PauliSum(0)"
        body = " + ".join(f"({c.real:.6g}{c.imag:+.6g}j)*{s}" for s, c in self._terms.items())
        return f"PauliSum({body})"

    # ---- matrices -----------------------------------------------------

    def grouped(self) -> dict[int, list[tuple[complex, int]]]:
        """Group terms by X mask as ``{x: [(c * i**n_y, z), ...]}``.

        Acting on basis state ``b`` a string maps to ``b ^ x`` with amplitude
        ``i**n_y * (-1)**popcount(b & z)``.
        """
        groups: dict[int, list[tuple[complex, int]]] = {}
        for s, c in self._terms.items():
            groups.setdefault(s.x, []).append((c * _PHASES[s.n_y % 4], s.z))
        return groups

    def to_sparse(self, n_qubits: int | None = None) -> sparse.csr_matrix:
        n = self.n_qubits if n_qubits is None else n_qubits
        if n < self.n_qubits:
            raise IndexError(f"Operator acts on {self.n_qubits} qubits, register has {n}")
        dim = 1 << n
        index = np.arange(dim, dtype=np.int64)
        rows, cols, data = [], [], []
        for x, entries in self.grouped().items():
            diag = np.zeros(dim, dtype=np.complex128)
            for coeff, z in entries:
                # bitwise_count is uint8; pick the sign without unsigned arithmetic
                diag += coeff * np.where(np.bitwise_count(index & z) & 1, -1.0, 1.0)
            rows.append(index ^ x)
            cols.append(index)
            data.append(diag)
        if not data:
            return sparse.csr_matrix((dim, dim), dtype=np.complex128)
        matrix = sparse.coo_matrix(
            (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))), shape=(dim, dim)
        )
        return matrix.tocsr()

    def to_matrix(self, n_qubits: int | None = None) -> np.ndarray:
        return self.to_sparse(n_qubits).toarray()


def _coerce(value: PauliSum | complex) -> PauliSum:
    if isinstance(value, PauliSum):
        return value
    if isinstance(value, (int, float, complex, np.number)):
        return PauliSum.identity(complex(value))
    raise TypeError(f"Cannot combine PauliSum with {type(value).__name__}")


def commutator(a: PauliSum, b: PauliSum) -> PauliSum:
    """``a b - b a``; only anticommuting string pairs contribute."""
    out: dict[PauliString, complex] = {}
    for sa, ca in a._terms.items():
        for sb, cb in b._terms.items():
            if sa.commutes_with(sb):
                continue
            phase, s = mul_strings(sa, sb)
            out[s] = out.get(s, 0j) + 2 * phase * ca * cb
    return PauliSum(out).simplify()


def anticommutator(a: PauliSum, b: PauliSum) -> PauliSum:
    """``a b + b a``; only commuting string pairs contribute."""
    out: dict[PauliString, complex] = {}
    for sa, ca in a._terms.items():
        for sb, cb in b._terms.items():
            if not sa.commutes_with(sb):
                continue
            phase, s = mul_strings(sa, sb)
            out[s] = out.get(s, 0j) + 2 * phase * ca * cb
    return PauliSum(out).simplify()


__all__ = [
    "SIMPLIFY_FLOOR",
    "IDENTITY",
    "Letter",
    "PauliString",
    "PauliSum",
    "mul_strings",
    "commutator",
    "anticommutator",
]
