from typing import Optional

from pydantic import BaseModel, ConfigDict

from src.defs.enums import Regime


class Envelope(BaseModel):
    """Bounds of the main theorem at a finite ``(n, p)``, in colours."""

    model_config = ConfigDict(frozen=True)

    lower: float
    upper: float
    regime: Regime
    #: Lower/upper of the trivial sandwich lg chi + 1 <= chi_s <= chi, with chi estimated
    #: by its asymptotic value; ``None`` when np < e (no estimate).
    trivial_lower: Optional[float] = None
    trivial_upper: Optional[float] = None
    #: Whether np >= (log^2 n)(log^2 np), the finite stand-in for the theorem's hypothesis.
    hypothesis_holds: bool = True
    #: Whether p >= (2 / log 2)(log n)(log log n) / n, the constructive upper bound's hypothesis.
    upper_hypothesis_holds: bool = True
    #: Whether ``lower`` was clamped into ``[0, upper]``.
    clamped: bool = False
    #: The upper bound of the subpolynomial regime drops an unknown o(1) term.
    asymptotic: bool = False


class TheoryPoint(BaseModel):
    """All derived parameters at ``(n, p)``."""

    model_config = ConfigDict(frozen=True)

    n: int
    p: float
    ell0: int
    s: float
    r_const: float
    r_upper: Optional[float] = None
    r_lower: Optional[float] = None
    alpha: float
    lower_bound: float
    upper_bound: float
    regime: Regime
    envelope: Envelope


class ZigzagRow(BaseModel):
    """One row of the zigzag table."""

    model_config = ConfigDict(frozen=True)

    p: float
    ell0: int
    s: float
    r: float
    r_upper: Optional[float] = None
