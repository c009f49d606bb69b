from typing import List

from pydantic import BaseModel, ConfigDict, Field


class SuenInputs(BaseModel):
    """Inputs of the Suen evaluator: colour-class sizes and the pair family."""

    model_config = ConfigDict(frozen=True)

    #: Colour-class sizes kappa_1..kappa_k.
    kappa: List[int] = Field(min_length=1)
    p: float = Field(gt=0.0, lt=1.0)
    #: Number of pairs in the family.
    pair_count: int = Field(ge=0)
    #: Maximum-degree proxy used to count neighbouring pairs.
    max_deg: float = Field(ge=0.0)


class SuenOutputs(BaseModel):
    model_config = ConfigDict(frozen=True)

    mu: float
    delta_big: float
    delta_small: float
    #: ``exp(log_bound)`` saturated into the positive finite doubles.
    bound: float = Field(gt=0.0, allow_inf_nan=False)
    #: Exponent ``-mu + Delta e^(2 delta)``; stays informative when ``bound`` saturates.
    log_bound: float


class BlockSuenCheck(BaseModel):
    """Suen evaluation for the block colouring, with the a.a.s. side conditions."""

    model_config = ConfigDict(frozen=True)

    inputs: SuenInputs
    outputs: SuenOutputs
    #: Actual ``P(A A') / P(A)`` for the block classes.
    triple_over_pair: float
    #: Its upper bound ``((3s - 1) / (2s))^k``.
    ratio_bound: float
    #: Union bound on some degree exceeding ``max_deg``.
    degree_tail: float


class HoelderCheck(BaseModel):
    """Both sides of the ratio inequality for one weighted tuple."""

    model_config = ConfigDict(frozen=True)

    lhs: float
    rhs: float
    s: float
    #: Point of [1/2, 1] with z^2 + (1 - z)^2 = s.
    z: float
    holds: bool


class ChernoffResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    mu: float
    delta: float
    lower_tail: float | None = None
    upper_tail: float | None = None


class CollisionEstimate(BaseModel):
    """Exact collision probability with an optional Monte Carlo estimate."""

    model_config = ConfigDict(frozen=True)

    probability: float
    frequency: float | None = None
    stderr: float | None = None
