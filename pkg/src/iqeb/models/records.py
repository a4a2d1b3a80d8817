from typing import Any, Self

from pydantic import BaseModel, Field, model_validator

from .enums import ExcitationKind, Method, Termination
from .types import Hartree

# ============== SUB-MODELS ==============


class ChosenElement(BaseModel):
    """Ansatz element appended during one iteration."""

    kind: ExcitationKind
    indices: tuple[int, ...] = Field(description="Canonical spin-orbital (or qubit) indices")
    letters: str | None = Field(None, description="X/Y letters of a Pauli-string exponential, in index order")
    cnot_cost: int = Field(ge=0)
    slot: int = Field(ge=0, description="Parameter slot the element reads")
    pool_index: int | None = Field(None, ge=0)

    def label(self) -> str:
        body = "-".join(str(i) for i in self.indices)
        if self.letters:
            body = "".join(f"{a}{i}" for a, i in zip(self.letters, self.indices))
        return f"{self.kind.value}:{body}"


class ScreenStats(BaseModel):
    """Outcome of the pool-gradient screen."""

    largest_gradient: float = Field(ge=0.0)
    above_floor: int = Field(ge=0)
    pool_size: int = Field(ge=0)


class CandidateRecord(BaseModel):
    """One top-n candidate minimization."""

    pool_index: int = Field(ge=0)
    gradient: float
    delta_e: float
    evaluations: int = Field(ge=0)
    budget_exhausted: bool = False


# ============== RECORDS ==============


class IterationRecord(BaseModel):
    m: int = Field(ge=1, description="Iteration index")
    chosen: list[ChosenElement] = Field(default_factory=list)
    grad: float = Field(description="Pool gradient of the chosen element (largest |g| in the screen)")
    delta_e: float = Field(description="Energy reduction of this iteration (Hartree)")
    energy: float = Field(description="E^(m) after this iteration (Hartree)")
    n_params: int = Field(ge=0)
    n_cnots: int = Field(ge=0)
    accepted: bool = Field(True, description="False for the terminal record that triggered the exit")
    screen: ScreenStats | None = None
    candidates: list[CandidateRecord] = Field(default_factory=list)
    evaluations: int = Field(0, ge=0)
    budget_exhausted: bool = False
    wall_ms: float = Field(0.0, ge=0.0, description="Informative only")


class RunRecord(BaseModel):
    """Per-iteration trace of one simulation."""

    method: Method
    fixture: str = Field(description="FCIDUMP the Hamiltonian was built from")
    config: dict[str, Any] = Field(default_factory=dict, description="Snapshot of the run configuration")
    e_hf: Hartree
    e_fci: Hartree
    iterations: list[IterationRecord] = Field(default_factory=list)
    termination: Termination
    energy_after_complement: bool = Field(
        True, description="E^(m) is recorded after re-optimizing the appended spin complement"
    )
    notes: list[str] = Field(default_factory=list)
    seed: int | None = None

    @model_validator(mode="after")
    def check_variational_bound(self) -> Self:
        for record in self.iterations:
            if record.energy < self.e_fci - 1e-9:
                raise ValueError(f"Iteration {record.m} energy {record.energy} is below the FCI energy {self.e_fci}")
        return self

    @property
    def accepted(self) -> list[IterationRecord]:
        return [r for r in self.iterations if r.accepted]

    @property
    def final_energy(self) -> float:
        accepted = self.accepted
        return accepted[-1].energy if accepted else self.e_hf

    @property
    def error(self) -> float:
        return self.final_energy - self.e_fci

    @property
    def n_params(self) -> int:
        accepted = self.accepted
        return accepted[-1].n_params if accepted else 0

    @property
    def n_cnots(self) -> int:
        accepted = self.accepted
        return accepted[-1].n_cnots if accepted else 0

    @property
    def n_iterations(self) -> int:
        return len(self.accepted)

    def summary(self) -> str:
        return (
            f"{self.method.value}: E={self.final_energy:.12g} Ha, error={self.error:.3e} Ha, "
            f"params={self.n_params}, cnots={self.n_cnots}, iterations={self.n_iterations}, "
            f"termination={self.termination.value}"
        )
