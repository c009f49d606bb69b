"""Seeded sampling of the binomial random graph G(n, p)."""

import numpy as np
from loguru import logger

from src.defs.exceptions import ParameterError
from src.defs.graph import SEED_MAX, Graph, row_width


def make_rng(seed: int) -> np.random.Generator:
    """Return the PCG64 stream for ``seed``.

    PCG64 output for a given integer seed is fixed by numpy across platforms, which is
    what makes sampled graphs reproducible.
    """
    if not 0 <= seed <= SEED_MAX:
        raise ParameterError(f"Seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    """Sample G(n, p) from the stream seeded by ``seed``.

    Pairs ``(u, v)`` with ``u < v`` are visited in lexicographic order and consume one
    uniform double each; the pair is an edge iff the draw is below ``p``.

    Raises:
        ParameterError: If ``n < 1`` or ``p`` lies outside ``[0, 1]``.
    """
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"p must lie in [0, 1], got {p}")
    rng = make_rng(seed)
    rows = np.zeros((n, row_width(n)), dtype=np.uint8)
    segment = np.zeros(n, dtype=bool)
    for u in range(n - 1):
        segment[u + 1 :] = rng.random(n - u - 1) < p
        rows[u] |= np.packbits(segment, bitorder="little")
        # mirror into column u of the later rows
        later = np.flatnonzero(segment)
        rows[later, u >> 3] |= np.uint8(1 << (u & 7))
        segment[u + 1] = False
    graph = Graph(n, rows)
    logger.debug("Sampled G({}, {}) with seed {}: {} edges", n, p, seed, edge_count(graph))
    return graph


def edge_count(g: Graph) -> int:
    """Number of unordered adjacent pairs."""
    return int(g.degrees().sum()) // 2
