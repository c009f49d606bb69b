"""Closed-form parameter functions of ``(n, p)``.

``lg`` is the base-2 logarithm and ``log`` the natural one throughout.
"""

import math
from typing import Optional, Tuple

import numpy as np
from loguru import logger

from src.core.config import Config
from src.defs.enums import Regime
from src.defs.exceptions import DomainError, ParameterError
from src.defs.theory import Envelope, TheoryPoint


def _check_p(p: float) -> None:
    if not 0.0 < p < 1.0:
        raise ParameterError(f"p must lie in (0, 1), got {p}")


def miss_probability(p: float, ell: float) -> float:
    """``(1 - p)^ell``: the chance a vertex has no neighbour among ``ell`` vertices."""
    return math.exp(ell * math.log1p(-p))


def f_ell(p: float, ell: int) -> float:
    """Chance that two vertices agree on whether they see a class of size ``ell``."""
    t = miss_probability(p, ell)
    return t * t + (1.0 - t) * (1.0 - t)


def f_ell_identity(p: float, ell: int) -> float:
    """``f_ell`` written as ``2 (t - 1/2)^2 + 1/2``; shows ``f_ell >= 1/2``."""
    t = miss_probability(p, ell)
    return 2.0 * (t - 0.5) ** 2 + 0.5


def ell0_candidates(p: float) -> Tuple[int, int]:
    """Floor and ceiling of ``log(1/2) / log(1 - p)``, each at least 1."""
    _check_p(p)
    x = math.log(0.5) / math.log1p(-p)
    return max(1, math.floor(x)), max(1, math.ceil(x))


def s_and_ell0(p: float) -> Tuple[float, int]:
    """Return ``s(p) = min_{ell >= 1} f_ell(p)`` and the smallest minimising ``ell``.

    ``t = (1 - p)^ell`` decreases in ``ell``, so the minimiser is the ``ell`` whose ``t``
    lies closest to 1/2, i.e. one of the two candidates around ``log(1/2)/log(1-p)``.

    Raises:
        ParameterError: If ``p`` is not in ``(0, 1)``.
    """
    best_ell = 0
    best_value = math.inf
    for ell in sorted(set(ell0_candidates(p))):
        value = f_ell(p, ell)
        if value < best_value:
            best_ell, best_value = ell, value
    return best_value, best_ell


def brute_force_s(p: float, ell_max: int = 1000) -> Tuple[float, int]:
    """Minimise ``f_ell`` over ``ell = 1..ell_max`` by direct evaluation."""
    _check_p(p)
    ells = np.arange(1, ell_max + 1, dtype=np.float64)
    t = np.exp(ells * np.log1p(-p))
    values = t * t + (1.0 - t) * (1.0 - t)
    idx = int(np.argmin(values))
    return float(values[idx]), idx + 1


def r_const(p: float) -> float:
    """``r(p) = 2 / lg(1/s)``, the coefficient of ``lg n`` for constant ``p``."""
    s, _ = s_and_ell0(p)
    return 2.0 / math.log2(1.0 / s)


def r_upper(n: int, p: float) -> float:
    """Solve ``n^2 p s^(r lg n) = 1`` for ``r``.

    Raises:
        DomainError: If ``n < 2`` or ``n^2 p <= 1`` (no positive solution).
    """
    _check_p(p)
    if n < 2:
        raise DomainError(f"r_upper needs n >= 2, got {n}")
    lg_n2p = 2.0 * math.log2(n) + math.log2(p)
    if lg_n2p <= 0.0:
        raise DomainError(f"r_upper needs n^2 p > 1, got n={n}, p={p}")
    s, _ = s_and_ell0(p)
    return lg_n2p / (math.log2(1.0 / s) * math.log2(n))


def sparse_log_gap(n: int, p: float) -> float:
    """``lg(np) - lg log n - lg log(np)``; needs ``n >= 3`` and ``np > 1``."""
    np_ = n * p
    if n < 3 or np_ <= 1.0:
        raise DomainError(f"needs n >= 3 and np > 1, got n={n}, p={p}")
    return math.log2(np_) - math.log2(math.log(n)) - math.log2(math.log(np_))


def r_lower(n: int, p: float) -> float:
    """Solve ``(np)^2 s^(r lg n) = (log^2 n)(log^2 np)`` for ``r``.

    Raises:
        DomainError: If ``n < 3`` or ``np <= 1``.
    """
    _check_p(p)
    s, _ = s_and_ell0(p)
    return -2.0 * sparse_log_gap(n, p) / (math.log2(n) * math.log2(s))


def upper_bound_validity(n: int, p: float) -> bool:
    """Whether ``p >= (2 / log 2)(log n)(log log n) / n`` holds."""
    if n < 3:
        return False
    return p >= (2.0 / math.log(2.0)) * math.log(n) * math.log(math.log(n)) / n


def lower_bound_validity(n: int, p: float) -> bool:
    """Whether ``np >= (log^2 n)(log^2 np)`` holds."""
    np_ = n * p
    if n < 3 or np_ <= 1.0:
        return False
    return np_ >= math.log(n) ** 2 * math.log(np_) ** 2


def chi_estimate(n: int, p: float) -> Optional[float]:
    """First-order value of ``chi(G(n, p))``: ``n log(1/(1-p)) / (2 log np)``.

    ``None`` when ``np < e``, where the estimate has no meaning.
    """
    np_ = n * p
    if np_ < math.e:
        return None
    return max(1.0, n * -math.log1p(-p) / (2.0 * math.log(np_)))


def theorem_envelope(n: int, p: float, *, config: Optional[Config] = None) -> Envelope:
    """Bound envelope of the main theorem at a finite ``(n, p)``.

    The regime is picked by ``p >= constant_p_threshold`` (constant ``p``) and then by
    the finite proxy ``alpha = log(np) / log n``. In the subpolynomial regime the lower
    bound is clamped into ``[0, lg n]`` because its formula leaves the theorem's range
    when ``np`` is close to 1.

    Raises:
        ParameterError: If ``n < 3`` or ``p`` is not in ``(0, 1)``.
    """
    config = config or Config()
    _check_p(p)
    if n < 3:
        raise ParameterError(f"theorem_envelope needs n >= 3, got {n}")
    lg_n = math.log2(n)
    alpha = math.log(n * p) / math.log(n)

    clamped = False
    asymptotic = False
    if p >= config.constant_p_threshold:
        regime = Regime.DenseConst
        lower = upper = r_const(p) * lg_n
    elif alpha >= config.polynomial_alpha_threshold:
        regime = Regime.Polynomial
        lower, upper = 2.0 * alpha * lg_n, (1.0 + alpha) * lg_n
    else:
        regime = Regime.Subpolynomial
        asymptotic = True
        upper = lg_n
        try:
            raw = 2.0 * sparse_log_gap(n, p)
        except DomainError:
            raw = 0.0
            clamped = True
        lower = min(max(raw, 0.0), upper)
        clamped = clamped or lower != raw
        if clamped:
            logger.warning("Clamped lower envelope at n={}, p={} from {} to {}", n, p, raw, lower)

    chi_hat = chi_estimate(n, p)
    return Envelope(
        lower=lower,
        upper=upper,
        regime=regime,
        trivial_lower=None if chi_hat is None else math.log2(chi_hat) + 1.0,
        trivial_upper=chi_hat,
        hypothesis_holds=lower_bound_validity(n, p),
        upper_hypothesis_holds=upper_bound_validity(n, p),
        clamped=clamped,
        asymptotic=asymptotic,
    )


def _optional(fn, n: int, p: float) -> Optional[float]:
    try:
        return fn(n, p)
    except DomainError:
        return None


def theory_point(n: int, p: float, *, config: Optional[Config] = None) -> TheoryPoint:
    """Assemble every derived parameter at ``(n, p)``."""
    envelope = theorem_envelope(n, p, config=config)
    s, ell0 = s_and_ell0(p)
    return TheoryPoint(
        n=n,
        p=p,
        ell0=ell0,
        s=s,
        r_const=2.0 / math.log2(1.0 / s),
        r_upper=_optional(r_upper, n, p),
        r_lower=_optional(r_lower, n, p),
        alpha=math.log(n * p) / math.log(n),
        lower_bound=envelope.lower,
        upper_bound=envelope.upper,
        regime=envelope.regime,
        envelope=envelope,
    )
