# src/experiments/schema.py
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..config.settings import settings
from ..spectral.distance import SolverOptions

Subcommand = Literal["distortion", "approximate", "recover-circle", "distance", "net"]


class ExperimentConfig(BaseModel):
    """
    Configuration of one experiment run.
    Defaults come from settings; CLI flags override them and a --config JSON file overrides both.
    """
    model_config = ConfigDict(extra="forbid")

    subcommand: Subcommand
    n_values: Optional[List[int]] = Field(None, description="Truncation sizes, ascending; the study picks a default if absent")
    samples: int = Field(12, ge=1, description="Random pure states per n, or candidate states for the net study")
    points: int = Field(16, ge=1, description="Number L of equally spaced Fejér centres")
    targets: int = Field(8, ge=1, description="Random target measures for the net study")
    m: int = Field(2, ge=1, description="Number of roots of unity carrying the discretized target")
    N_values: List[float] = Field(default_factory=lambda: [1e2, 1e3, 1e4], description="Sharpness values for approx_state")
    powers: List[int] = Field(default_factory=lambda: [2, 4, 8, 16], description="Kernel powers for product_state")
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED, ge=0)
    grid: int = Field(default_factory=lambda: settings.GRID_SIZE, ge=256, description="Transport grid size G")
    max_iters: int = Field(default_factory=lambda: settings.SOLVER_MAX_ITERS, ge=1)
    tol: float = Field(default_factory=lambda: settings.SOLVER_TOL, gt=0)
    workers: int = Field(default_factory=lambda: settings.MAX_WORKERS, ge=1)
    strict: bool = False
    timings: bool = False
    quiet: bool = False
    out: Optional[str] = None
    format: Literal["csv", "json"] = Field(default_factory=lambda: settings.OUTPUT_FORMAT)
    target: Optional[str] = Field(None, description="JSON measure file for the approximation study")
    state_a: Optional[str] = None
    state_b: Optional[str] = None

    @field_validator("n_values")
    @classmethod
    def check_ascending(cls, v):
        if v is None:
            return v
        if not v:
            raise ValueError("n-range must not be empty")
        if any(n < 1 for n in v):
            raise ValueError("Truncation sizes must be positive")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError(f"n-range must be strictly ascending, got {v}")
        return v

    @field_validator("N_values")
    @classmethod
    def check_sharpness(cls, v):
        if not v or any(N <= 0 for N in v):
            raise ValueError("N values must be positive")
        return v

    @field_validator("powers")
    @classmethod
    def check_powers(cls, v):
        if not v or any(p < 1 for p in v):
            raise ValueError("Kernel powers must be positive integers")
        return v

    def solver_options(self) -> SolverOptions:
        return SolverOptions.from_settings(max_iters=self.max_iters, tol=self.tol, strict=self.strict)

    @property
    def show_progress(self) -> bool:
        return settings.SHOW_PROGRESS and not self.quiet
