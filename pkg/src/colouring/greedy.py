"""First-fit proper colouring."""

from typing import Optional, Sequence

import numpy as np

from src.defs.colouring import Colouring
from src.defs.exceptions import ParameterError
from src.defs.graph import Graph


def largest_first_order(g: Graph) -> np.ndarray:
    """Vertices by non-increasing degree, ties by index."""
    return np.argsort(-g.degrees(), kind="stable")


def greedy_proper_colouring(g: Graph, order: Optional[Sequence[int]] = None) -> Colouring:
    """Colour vertices in ``order`` with the smallest colour unused by coloured neighbours.

    Uses at most ``max degree + 1`` colours.

    Raises:
        ParameterError: If ``order`` is not a permutation of ``0..n-1``.
    """
    order_arr = np.arange(g.n) if order is None else np.asarray(order, dtype=np.int64)
    if order_arr.shape != (g.n,) or not np.array_equal(np.sort(order_arr), np.arange(g.n)):
        raise ParameterError("order must be a permutation of the vertices")
    colours = np.zeros(g.n, dtype=np.int64)
    for v in order_arr:
        seen = colours[g.row(v)]
        seen = seen[seen > 0]
        free = np.ones(seen.size + 2, dtype=bool)
        free[0] = False
        free[seen[seen <= seen.size + 1]] = False
        colours[v] = int(np.argmax(free))
    return Colouring(colours, k=int(colours.max()))
