"""The block colouring behind the upper bound.

Before any edge is looked at, vertices ``0..B*ell0-1`` are cut into ``B`` consecutive
blocks of ``ell0`` important vertices with ``B = ceil(r lg n + omega)`` and ``r`` from
``r_upper``. Block ``b`` gets colour ``b + 1``; every remaining vertex gets ``B + 1``.
"""

import math
from typing import Tuple

import numpy as np
from loguru import logger

from src.defs.colouring import Colouring, ConstructiveParams
from src.defs.exceptions import InfeasibleError
from src.defs.graph import Graph
from src.theory.parameters import r_upper, s_and_ell0

#: Slack absorbing floating error before rounding ``r lg n + omega`` up.
CEIL_SLACK = 1e-9


def block_layout(n: int, p: float, omega: int) -> Tuple[int, int, float]:
    """Return ``(B, ell0, r)`` for the block colouring of an ``n``-vertex graph."""
    _, ell0 = s_and_ell0(p)
    r = r_upper(n, p)
    blocks = math.ceil(r * math.log2(n) + omega - CEIL_SLACK)
    return blocks, ell0, r


def constructive_set_colouring(g: Graph, params: ConstructiveParams) -> Colouring:
    """Colour ``g`` with the edge-independent block colouring.

    Raises:
        InfeasibleError: If ``B * ell0 > n``.
        DomainError: If ``n^2 p <= 1``.
    """
    blocks, ell0, r = block_layout(g.n, params.p, params.omega)
    important = blocks * ell0
    if important > g.n:
        raise InfeasibleError(
            f"{blocks} blocks of {ell0} vertices need {important} > n={g.n} vertices"
        )
    colours = np.full(g.n, blocks + 1, dtype=np.int64)
    colours[:important] = np.arange(important) // ell0 + 1
    logger.debug(
        "Constructive colouring: n={}, p={}, omega={}, r={}, ell0={}, B={}",
        g.n,
        params.p,
        params.omega,
        r,
        ell0,
        blocks,
    )
    return Colouring(colours, k=blocks + 1)


def expected_undistinguished_pairs(n: int, p: float, omega: int) -> float:
    """``C(n, 2) p s^(r lg n + omega - 2)`` with ``r = r_upper(n, p)``.

    Upper bound on the expected number of edges whose endpoints the block colouring
    fails to tell apart; by Markov's inequality also a bound on the failure probability.
    The exponent uses ``r lg n + omega`` unrounded.
    """
    s, _ = s_and_ell0(p)
    r = r_upper(n, p)
    exponent = r * math.log2(n) + omega - 2
    return math.exp(math.log(math.comb(n, 2)) + math.log(p) + exponent * math.log(s))
