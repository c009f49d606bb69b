"""Suen's inequality for the event that no pair shares its neighbourhood colour set."""

import math
import sys
from typing import Optional

from loguru import logger

from src.bounds.chernoff import max_degree_tail
from src.bounds.collision import collision_probability, collision_probability_triple
from src.defs.bounds import BlockSuenCheck, SuenInputs, SuenOutputs
from src.theory.parameters import s_and_ell0

#: Exponents outside this range over- or underflow ``math.exp``.
LOG_MAX = math.log(sys.float_info.max)
LOG_MIN = math.log(sys.float_info.min)


def suen_bound(inputs: SuenInputs) -> SuenOutputs:
    """Evaluate ``exp(-mu + Delta e^(2 delta))``.

    ``mu = |I| P(A)``; ``Delta <= |I| (2 max_deg) P(A A')`` counts pairs sharing a vertex
    through the degree proxy; ``delta <= 2 max_deg P(A)``. The exponent is returned as
    ``log_bound``; ``bound`` saturates at the largest and smallest positive normal
    doubles when the exponent leaves their range.
    """
    if inputs.pair_count == 0:
        return SuenOutputs(mu=0.0, delta_big=0.0, delta_small=0.0, bound=1.0, log_bound=0.0)
    pair = collision_probability(inputs.kappa, inputs.p)
    triple = collision_probability_triple(inputs.kappa, inputs.p)
    mu = inputs.pair_count * pair
    delta_big = inputs.pair_count * (2.0 * inputs.max_deg) * triple
    delta_small = 2.0 * inputs.max_deg * pair
    if delta_big == 0.0:
        log_bound = -mu
    else:
        log_growth = math.log(delta_big) + 2.0 * delta_small
        log_bound = -mu + math.exp(log_growth) if log_growth < LOG_MAX else math.inf
    if log_bound > LOG_MAX:
        logger.warning(
            "Suen exponent {} overflows (delta={}); bound is vacuous", log_bound, delta_small
        )
        bound = sys.float_info.max
    elif log_bound < LOG_MIN:
        logger.debug("Suen exponent {} underflows; bound saturates", log_bound)
        bound = sys.float_info.min
    else:
        bound = math.exp(log_bound)
    logger.debug("Suen: mu={}, Delta={}, delta={}, bound={}", mu, delta_big, delta_small, bound)
    return SuenOutputs(
        mu=mu, delta_big=delta_big, delta_small=delta_small, bound=bound, log_bound=log_bound
    )


def block_colouring_inputs(n: int, p: float, k: int, max_deg: Optional[float] = None) -> SuenInputs:
    """Inputs for ``k`` classes of size ``ell0``, ``n^2 p / 4`` pairs and degree ``2pn``."""
    _, ell0 = s_and_ell0(p)
    return SuenInputs(
        kappa=[ell0] * k,
        p=p,
        pair_count=int(n * n * p / 4),
        max_deg=sparse_deg_bound(n, p) if max_deg is None else max_deg,
    )


def delta_over_mu_ratio(s: float, k: float) -> float:
    """``((3s - 1) / (2s))^k``: bound on ``P(A A') / P(A)`` when ``P(A) = s^k``."""
    return ((3.0 * s - 1.0) / (2.0 * s)) ** k


def sparse_deg_bound(n: int, p: float) -> float:
    """The degree cap ``2pn`` that holds a.a.s. in G(n, p) for ``np >> log n``."""
    return 2.0 * p * n


def block_suen_check(n: int, p: float, k: int) -> BlockSuenCheck:
    """Suen's bound for the block colouring with ``k`` classes of size ``ell0``.

    Also reports the ratio ``P(A A') / P(A)`` against ``((3s - 1) / (2s))^k`` and the
    probability that the degree cap ``2pn`` fails.
    """
    inputs = block_colouring_inputs(n, p, k)
    s, _ = s_and_ell0(p)
    triple = collision_probability_triple(inputs.kappa, p)
    pair = collision_probability(inputs.kappa, p)
    return BlockSuenCheck(
        inputs=inputs,
        outputs=suen_bound(inputs),
        triple_over_pair=triple / pair,
        ratio_bound=delta_over_mu_ratio(s, k),
        degree_tail=max_degree_tail(n, p),
    )
