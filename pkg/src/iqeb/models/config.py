from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .enums import PoolKind, Selection


class OptimizerSettings(BaseModel):
    """BFGS stopping rules and Wolfe line-search constants."""

    model_config = ConfigDict(frozen=True)

    gradient_norm_tolerance: float = Field(1e-8, gt=0.0, description="Stop when the gradient norm drops below")
    parameter_tolerance: float = Field(1e-10, gt=0.0, description="Stop when the step length drops below")
    max_evaluations: int = Field(20000, ge=1, description="Energy+gradient evaluation budget")
    c1: float = Field(1e-4, gt=0.0, lt=1.0, description="Armijo constant")
    c2: float = Field(0.9, gt=0.0, lt=1.0, description="Curvature constant")
    max_line_search_iterations: int = Field(20, ge=1)

    @model_validator(mode="after")
    def check_wolfe_constants(self) -> Self:
        if not self.c1 < self.c2:
            raise ValueError(f"Wolfe constants need 0 < c1 < c2 < 1, got c1={self.c1}, c2={self.c2}")
        return self


class GrowthConfig(BaseModel):
    """Settings of one adaptive ansatz growth run."""

    model_config = ConfigDict(frozen=True)

    pool_kind: PoolKind = Field(PoolKind.QUBIT, description="Pool the ansatz elements are drawn from")
    selection: Selection = Field(Selection.TOP_N_ENERGY_REDUCTION)
    n: int = Field(10, ge=1, description="Candidates minimized per iteration")
    epsilon: float = Field(1e-6, gt=0.0, description="Exit threshold (Hartree, or gradient for greedy runs)")
    spin_complement_append: bool = Field(True, description="Append the spin complement of the chosen element")
    max_iterations: int = Field(200, ge=1)
    gradient_floor: float = Field(1e-12, ge=0.0, description="Terminate when every pool gradient is below")
    threads: int | None = Field(None, ge=1, description="Worker threads, None for all cores")
    optimizer: OptimizerSettings = Field(default_factory=OptimizerSettings)

    @model_validator(mode="after")
    def check_complement(self) -> Self:
        if self.spin_complement_append and self.pool_kind is PoolKind.PAULI_EXPONENTIAL:
            raise ValueError("Pauli-string exponentials have no spin complement")
        return self
