"""Chernoff tail bounds for binomial random variables with mean ``mu``."""

import math

from src.defs.bounds import ChernoffResult
from src.defs.exceptions import ParameterError


def chernoff_lower(mu: float, delta: float) -> float:
    """Bound on ``P[X < (1 - delta) mu]``: ``exp(-delta^2 mu / 2)``, for ``0 < delta < 1``."""
    if mu <= 0:
        raise ParameterError(f"mu must be positive, got {mu}")
    if not 0.0 < delta < 1.0:
        raise ParameterError(f"delta must lie in (0, 1) for the lower tail, got {delta}")
    return math.exp(-(delta**2) * mu / 2.0)


def chernoff_upper(mu: float, delta: float) -> float:
    """Bound on ``P[X > (1 + delta) mu]``: ``exp(-delta^2 mu / (2 + delta))``, for ``delta > 0``."""
    if mu <= 0:
        raise ParameterError(f"mu must be positive, got {mu}")
    if delta <= 0:
        raise ParameterError(f"delta must be positive for the upper tail, got {delta}")
    return math.exp(-(delta**2) * mu / (2.0 + delta))


def chernoff_binomial_check(mu: float, delta: float) -> ChernoffResult:
    """Both tails where defined; the lower tail is ``None`` for ``delta >= 1``."""
    return ChernoffResult(
        mu=mu,
        delta=delta,
        lower_tail=chernoff_lower(mu, delta) if delta < 1.0 else None,
        upper_tail=chernoff_upper(mu, delta),
    )


def max_degree_tail(n: int, p: float) -> float:
    """Union bound on ``P[some vertex of G(n, p) has degree > 2 (n - 1) p]``."""
    if n < 2 or not 0.0 < p < 1.0:
        raise ParameterError(f"needs n >= 2 and p in (0, 1), got n={n}, p={p}")
    return min(1.0, n * chernoff_upper((n - 1) * p, 1.0))
