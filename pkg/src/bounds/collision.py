"""Probabilities that two (or three) vertices see the same colour classes.

A vertex outside a class of ``kappa`` vertices misses it with probability
``t = (1 - p)^kappa``. Two vertices agree on a class with probability ``t^2 + (1-t)^2``
and three with ``t^3 + (1-t)^3``; classes are independent, so the factors multiply.
"""

from typing import Sequence, Tuple

import numpy as np

from src.defs.exceptions import ParameterError
from src.graphs.gnp import make_rng
from src.utils import log_product


def class_miss_probabilities(kappa: Sequence[int], p: float) -> np.ndarray:
    if not 0.0 < p < 1.0:
        raise ParameterError(f"p must lie in (0, 1), got {p}")
    sizes = np.asarray(kappa, dtype=np.float64)
    if sizes.ndim != 1 or sizes.size == 0 or (sizes < 1).any():
        raise ParameterError("kappa must be a non-empty sequence of sizes >= 1")
    return np.exp(sizes * np.log1p(-p))


def collision_probability(kappa: Sequence[int], p: float) -> float:
    """``prod_i ([(1-p)^k_i]^2 + [1-(1-p)^k_i]^2)``."""
    t = class_miss_probabilities(kappa, p)
    return log_product(t**2 + (1.0 - t) ** 2)


def collision_probability_triple(kappa: Sequence[int], p: float) -> float:
    """``prod_i ([(1-p)^k_i]^3 + [1-(1-p)^k_i]^3)``."""
    t = class_miss_probabilities(kappa, p)
    return log_product(t**3 + (1.0 - t) ** 3)


def simulate_collision_frequency(
    kappa: Sequence[int],
    p: float,
    trials: int,
    seed: int,
    batch: int = 100_000,
    vertices: int = 2,
) -> Tuple[float, float]:
    """Monte Carlo estimate of the collision probability and its standard error.

    Each trial draws every edge from ``vertices`` fresh vertices into the classes and
    records whether all of them see exactly the same classes. Two vertices estimate
    ``collision_probability``, three estimate ``collision_probability_triple``.
    """
    class_miss_probabilities(kappa, p)
    if trials < 1:
        raise ParameterError(f"trials must be positive, got {trials}")
    if vertices not in (2, 3):
        raise ParameterError(f"vertices must be 2 or 3, got {vertices}")
    sizes = np.asarray(kappa, dtype=np.int64)
    starts = np.concatenate(([0], np.cumsum(sizes)[:-1]))
    width = int(sizes.sum())
    rng = make_rng(seed)
    hits = 0
    done = 0
    while done < trials:
        m = min(batch, trials - done)
        x_sees = np.logical_or.reduceat(rng.random((m, width)) < p, starts, axis=1)
        y_sees = np.logical_or.reduceat(rng.random((m, width)) < p, starts, axis=1)
        same = (x_sees == y_sees).all(axis=1)
        if vertices == 3:
            z_sees = np.logical_or.reduceat(rng.random((m, width)) < p, starts, axis=1)
            same &= (y_sees == z_sees).all(axis=1)
        hits += int(same.sum())
        done += m
    freq = hits / trials
    return freq, float(np.sqrt(freq * (1.0 - freq) / trials))
