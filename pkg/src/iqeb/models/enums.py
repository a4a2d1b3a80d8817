from enum import Enum

# ============== ENUMS ==============


class ExcitationKind(str, Enum):
    QUBIT_SINGLE = "qubit_single"
    QUBIT_DOUBLE = "qubit_double"
    FERMIONIC_SINGLE = "fermionic_single"
    FERMIONIC_DOUBLE = "fermionic_double"
    PAULI_EXPONENTIAL = "pauli_exponential"

    @property
    def is_skew(self) -> bool:
        """Generator T with T† = -T and T³ = -T."""
        return self is not ExcitationKind.PAULI_EXPONENTIAL


class PoolKind(str, Enum):
    QUBIT = "qubit"
    FERMIONIC = "fermionic"
    FERMIONIC_PAIRS = "fermionic_spin_complement_pairs"
    PAULI_EXPONENTIAL = "pauli_exponential"


class Selection(str, Enum):
    TOP_N_ENERGY_REDUCTION = "top_n_energy_reduction"
    LARGEST_GRADIENT = "largest_gradient"


class Termination(str, Enum):
    EPSILON_REACHED = "epsilon_reached"
    MAX_ITERATIONS = "max_iterations"
    GRADIENT_FLOOR = "gradient_floor"
    # Fixed-ansatz runs (UCCSD)
    CONVERGED = "converged"
    BUDGET_EXHAUSTED = "budget_exhausted"


class Method(str, Enum):
    IQEB = "iqeb"
    ADAPT = "adapt"
    QUBIT_ADAPT = "qubit-adapt"
    GREEDY_QUBIT = "greedy-qubit"
    GREEDY_FERMIONIC = "greedy-fermionic"
    UCCSD = "uccsd"
    HF = "hf"
    FCI = "fci"

    @property
    def is_reference(self) -> bool:
        return self in (Method.HF, Method.FCI)


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    MSGPACK = "msgpack"
    BOTH = "both"

    def suffixes(self) -> tuple[str, ...]:
        if self is OutputFormat.BOTH:
            return (".json", ".csv")
        return (f".{self.value}",)


class GateName(str, Enum):
    RX = "rx"
    RY = "ry"
    RZ = "rz"
    H = "h"
    X = "x"
    CX = "cx"

    @property
    def is_rotation(self) -> bool:
        return self in (GateName.RX, GateName.RY, GateName.RZ)
