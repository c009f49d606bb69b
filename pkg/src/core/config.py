from typing import Any

from pydantic import BaseModel, ConfigDict, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings for the setchrome CLI."""

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", case_sensitive=True
    )

    # --- app-specific settings ---

    # === General settings ===

    DEBUG: bool = False

    #: Process pool size for experiment sweeps (1 runs in-process).
    WORKERS: int = 1

    # === Theory settings ===

    #: Probabilities at or above this are treated as constant (regime (i)).
    CONSTANT_P_THRESHOLD: float = 0.01
    #: Finite-n alpha at or above this is treated as polynomial (regime (ii)).
    POLYNOMIAL_ALPHA_THRESHOLD: float = 0.05

    # === Colouring settings ===

    #: Slack added to ``r lg n`` in the constructive colouring.
    DEFAULT_OMEGA: int = 10

    # === Solver settings ===

    EXACT_CHI_MAX_N: int = 64
    EXACT_CHIS_MAX_N: int = 12
    #: Search budget in explored nodes.
    SOLVER_NODE_BUDGET: int = 5_000_000
    #: Largest k**n the brute-force oracle agrees to enumerate.
    ORACLE_ASSIGNMENT_CAP: int = 10**8

    # === Bounds settings ===

    INEQUALITY_TOLERANCE: float = 1e-12


settings = Settings(_env_file=".env", _env_file_encoding="utf-8")  # type: ignore[call-arg]


class Config(BaseModel):
    """Tunables shared by the library operations; defaults come from ``settings``."""

    model_config = ConfigDict(frozen=True)

    #: Regime (i) cut on p.
    constant_p_threshold: float = settings.CONSTANT_P_THRESHOLD
    #: Regime (ii) cut on alpha.
    polynomial_alpha_threshold: float = settings.POLYNOMIAL_ALPHA_THRESHOLD

    #: Constructive slack.
    omega: int = settings.DEFAULT_OMEGA

    #: Largest n for exact chromatic number.
    exact_chi_max_n: int = settings.EXACT_CHI_MAX_N
    #: Largest n for exact set chromatic number.
    exact_chis_max_n: int = settings.EXACT_CHIS_MAX_N
    #: Default search budget, in explored nodes.
    node_budget: int = settings.SOLVER_NODE_BUDGET
    oracle_assignment_cap: int = settings.ORACLE_ASSIGNMENT_CAP

    tolerance: float = settings.INEQUALITY_TOLERANCE

    workers: int = settings.WORKERS

    @model_validator(mode="before")
    @classmethod
    def _check_thresholds(cls, data: Any) -> Any:
        """Reject thresholds that would make a regime unreachable."""
        if isinstance(data, dict):
            p_cut = data.get("constant_p_threshold", settings.CONSTANT_P_THRESHOLD)
            if not 0.0 < p_cut < 1.0:
                raise ValueError(f"constant_p_threshold must lie in (0, 1), got {p_cut}")
            if data.get("omega", 1) < 1:
                raise ValueError("omega must be at least 1")
            if data.get("workers", 1) < 1:
                raise ValueError("workers must be at least 1")
        return data
