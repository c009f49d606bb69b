from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.core.config import settings
from src.defs.graph import Seed

#: Version tag written as the first line of every harness CSV.
CSV_SCHEMA_TAG = "# setchrome-v1"


class ExperimentConfig(BaseModel):
    """A Monte Carlo sweep over an ``(n, p)`` grid."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n_grid: List[int] = Field(min_length=1)
    p_grid: List[float] = Field(min_length=1)
    trials: int = Field(ge=1)
    omega: int = Field(default=settings.DEFAULT_OMEGA, ge=1)
    seed_base: Seed
    exact_cutoff: int = Field(ge=0)
    output_path: str

    @field_validator("n_grid")
    @classmethod
    def _check_n_grid(cls, value: List[int]) -> List[int]:
        if any(n < 3 for n in value):
            raise ValueError("all vertex counts must be at least 3")
        return value

    @field_validator("p_grid")
    @classmethod
    def _check_p_grid(cls, value: List[float]) -> List[float]:
        if any(not 0.0 < p < 1.0 for p in value):
            raise ValueError("all probabilities must lie in (0, 1)")
        return value


class ExperimentRecord(BaseModel):
    """One trial of a sweep."""

    model_config = ConfigDict(frozen=True)

    n: int
    p: float
    seed: int
    #: ``None`` marks infeasible constructive parameters.
    constructive_colours: Optional[int] = None
    constructive_valid: bool = False
    greedy_chi: int
    exact_chi: Optional[int] = None
    exact_chis: Optional[int] = None
    envelope_lower: float
    envelope_upper: float
    trivial_lower: float
    trivial_upper: float
    important_colours: Optional[int] = None
    unimportant_colours: Optional[int] = None


class DominationRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    trial: int
    set_size: int
    undominated_count: int
    passed: bool = Field(serialization_alias="pass")


class ColourPartition(BaseModel):
    """Colours split by class size against ``2 log n / p``."""

    model_config = ConfigDict(frozen=True)

    threshold: float
    important: List[int]
    unimportant: List[int]
