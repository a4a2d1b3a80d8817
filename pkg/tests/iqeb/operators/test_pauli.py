import itertools

import numpy as np
import pytest

from iqeb import PauliString, PauliSum
from iqeb.operators.pauli import anticommutator, commutator, mul_strings

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def dense(string: PauliString, n_qubits: int) -> np.ndarray:
    """Kronecker product with qubit 0 as the least significant bit."""
    factors = string.factors
    matrix = np.eye(1, dtype=complex)
    for q in reversed(range(n_qubits)):
        matrix = np.kron(matrix, _SINGLE[factors.get(q, "I")])
    return matrix


def random_string(rng: np.random.Generator, n_qubits: int) -> PauliString:
    return PauliString(int(rng.integers(0, 1 << n_qubits)), int(rng.integers(0, 1 << n_qubits)))


def random_sum(rng: np.random.Generator, n_qubits: int, terms: int = 6, hermitian: bool = False) -> PauliSum:
    coeffs = rng.normal(size=terms) + (0 if hermitian else 1j * rng.normal(size=terms))
    return PauliSum([(c, random_string(rng, n_qubits)) for c in coeffs])


@pytest.mark.parametrize(
    ("a", "b", "phase", "product"),
    [
        ("X0", "Y0", 1j, "Z0"),
        ("Y0", "Z0", 1j, "X0"),
        ("Z0", "X0", 1j, "Y0"),
        ("Y0", "X0", -1j, "Z0"),
        ("Z0", "Z0", 1, "I"),
        ("X0 Z1", "Z0 Z1", -1j, "Y0"),
    ],
)
def test_mul_strings_follows_single_qubit_table(a: str, b: str, phase: complex, product: str) -> None:
    got_phase, got = mul_strings(PauliString.parse(a), PauliString.parse(b))

    assert got_phase == phase
    assert got == PauliString.parse(product)


def test_mul_strings_matches_dense_product(rng: np.random.Generator) -> None:
    for _ in range(100):
        a, b = random_string(rng, 4), random_string(rng, 4)
        phase, product = mul_strings(a, b)

        np.testing.assert_allclose(phase * dense(product, 4), dense(a, 4) @ dense(b, 4), atol=1e-12)


def test_mul_strings_is_associative_with_phases(rng: np.random.Generator) -> None:
    for _ in range(200):
        a, b, c = (random_string(rng, 6) for _ in range(3))
        p1, ab = mul_strings(a, b)
        p2, left = mul_strings(ab, c)
        p3, bc = mul_strings(b, c)
        p4, right = mul_strings(a, bc)

        assert left == right
        assert p1 * p2 == pytest.approx(p3 * p4)


def test_pauli_string_parse_and_str_agree() -> None:
    s = PauliString.parse("Z3X0 Y1")

    assert str(s) == "X0 Y1 Z3"
    assert s.weight == 3
    assert s.n_y == 1
    assert s.n_qubits == 4
    assert PauliString.parse("I").is_identity
    assert PauliString.parse("") == PauliString()


@pytest.mark.parametrize("label", ["X0 X0", "Q1", "X", "X0 junk"])
def test_pauli_string_parse_rejects_malformed_labels(label: str) -> None:
    with pytest.raises(ValueError):
        PauliString.parse(label)


def test_pauli_sum_addition_merges_coefficients() -> None:
    x0 = PauliSum.from_string("X0")

    assert x0 + x0 == PauliSum.from_string("X0", 2.0)
    assert not (x0 + x0 - 2 * x0)


def test_pauli_sum_ladder_product_is_a_projector() -> None:
    lower = PauliSum.from_labels({"X0": 0.5, "Y0": 0.5j})
    raise_ = PauliSum.from_labels({"X0": 0.5, "Y0": -0.5j})

    assert (raise_ * lower).isclose(PauliSum.from_labels({"I": 0.5, "Z0": -0.5}))
    assert not (lower * lower)


def test_pauli_sum_scale_by_zero_is_empty() -> None:
    assert len(PauliSum.from_labels({"X0 Y1": 1.0, "Z2": 0.3}).scale(0)) == 0


def test_pauli_sum_simplify_drops_terms_under_floor() -> None:
    h = PauliSum([(1e-15, PauliString.parse("Z0")), (0.5, PauliString.parse("X1"))])

    assert h.simplify() == PauliSum.from_labels({"X1": 0.5})
    assert len(h.simplify(1.0)) == 0
    with pytest.raises(ValueError):
        h.simplify(-1.0)


def test_pauli_sum_terms_are_in_lexicographic_order() -> None:
    h = PauliSum.from_labels({"Y0": 1.0, "X0": 1.0, "Z1": 1.0, "X0 X1": 1.0})

    assert [str(s) for _, s in h.terms] == ["X0", "X0 X1", "Y0", "Z1"]


@pytest.mark.parametrize(
    ("a", "b", "expected"),
    [
        (PauliSum.from_string("X0"), PauliSum.from_string("Y0"), PauliSum.from_string("Z0", 2j)),
        (PauliSum.from_string("Z0"), PauliSum.from_string("X1"), PauliSum()),
        (
            PauliSum.from_string("Z0"),
            PauliSum.from_labels({"X0 Y1": -0.5j, "Y0 X1": 0.5j}),
            PauliSum.from_labels({"X0 X1": 1.0, "Y0 Y1": 1.0}),
        ),
    ],
)
def test_commutator_matches_known_results(a: PauliSum, b: PauliSum, expected: PauliSum) -> None:
    assert commutator(a, b).isclose(expected)


def test_commutator_is_antisymmetric(rng: np.random.Generator) -> None:
    for _ in range(20):
        a, b = random_sum(rng, 4), random_sum(rng, 4)

        assert commutator(a, b).isclose(-commutator(b, a))


def test_algebra_matches_dense_matrices(rng: np.random.Generator) -> None:
    n = 5
    for _ in range(10):
        a, b = random_sum(rng, n), random_sum(rng, n)
        ma, mb = a.to_matrix(n), b.to_matrix(n)

        np.testing.assert_allclose((a * b).to_matrix(n), ma @ mb, atol=1e-10)
        np.testing.assert_allclose((a + b).to_matrix(n), ma + mb, atol=1e-10)
        np.testing.assert_allclose((a - 2.5 * b).to_matrix(n), ma - 2.5 * mb, atol=1e-10)
        np.testing.assert_allclose(commutator(a, b).to_matrix(n), ma @ mb - mb @ ma, atol=1e-10)
        np.testing.assert_allclose(anticommutator(a, b).to_matrix(n), ma @ mb + mb @ ma, atol=1e-10)
        np.testing.assert_allclose(a.adjoint().to_matrix(n), ma.conj().T, atol=1e-10)


def test_to_matrix_places_qubit_zero_in_the_lowest_bit() -> None:
    for label in ("X0", "Y1", "Z0 X2", "Y0 Y1 Z2"):
        s = PauliString.parse(label)

        np.testing.assert_allclose(PauliSum.from_string(s).to_matrix(3), dense(s, 3))


def test_to_matrix_signs_are_plus_or_minus_one() -> None:
    np.testing.assert_array_equal(PauliSum.from_labels({"Z0": 1}).to_matrix(1), _SINGLE["Z"])
    np.testing.assert_array_equal(PauliSum.from_labels({"Y0": 1}).to_matrix(1), _SINGLE["Y"])

    zz = PauliSum.from_labels({"Z0 Z1": 1}).to_matrix(2)

    np.testing.assert_array_equal(np.diag(zz), [1, -1, -1, 1])


def test_to_sparse_rejects_a_too_small_register() -> None:
    with pytest.raises(IndexError):
        PauliSum.from_string("Z3").to_sparse(2)


def test_is_hermitian_follows_real_coefficients(rng: np.random.Generator) -> None:
    h = random_sum(rng, 3, hermitian=True)

    assert h.is_hermitian()
    assert not PauliSum.from_string("X0", 1j).is_hermitian()
    np.testing.assert_allclose(h.to_matrix(3), h.to_matrix(3).conj().T)


def test_pauli_strings_square_to_identity() -> None:
    for letters in itertools.product("IXYZ", repeat=2):
        s = PauliString.from_factors(dict(enumerate(letters)))
        p = PauliSum.from_string(s)

        assert p * p == PauliSum.identity()
