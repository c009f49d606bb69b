"""Empirical check that a random vertex set of size ``2 ln n / p`` dominates G(n, p)."""

import math
from typing import List

import numpy as np
from loguru import logger

from src.defs.exceptions import ParameterError
from src.defs.experiment import CSV_SCHEMA_TAG, DominationRow
from src.graphs.gnp import make_rng, sample_gnp
from src.harness.seeds import splitmix64, trial_seed


def domination_set_size(n: int, p: float) -> int:
    return math.ceil(2.0 * math.log(n) / p)


def undominated_outside(rows: np.ndarray, n: int, chosen: np.ndarray) -> int:
    """Vertices outside ``chosen`` with no neighbour in ``chosen``."""
    covered = np.bitwise_or.reduce(rows[chosen], axis=0)
    dominated = np.unpackbits(covered, count=n, bitorder="little").astype(bool)
    outside = np.ones(n, dtype=bool)
    outside[chosen] = False
    return int((outside & ~dominated).sum())


def domination_check(n: int, p: float, trials: int, seed: int) -> List[DominationRow]:
    """Run ``trials`` independent graph/set draws; a trial passes iff at most ``m`` vertices
    outside the set are undominated, ``m = ceil(2 ln n / p)``.

    Raises:
        ParameterError: If ``m >= n`` or the arguments are out of range.
    """
    if n < 2 or not 0.0 < p < 1.0 or trials < 1:
        raise ParameterError(f"needs n >= 2, p in (0, 1) and trials >= 1, got {n}, {p}, {trials}")
    m = domination_set_size(n, p)
    if m >= n:
        raise ParameterError(f"set size {m} is not smaller than n={n}")
    rows = []
    for trial in range(trials):
        graph_seed = trial_seed(seed, 0, trial)
        g = sample_gnp(n, p, graph_seed)
        chosen = make_rng(splitmix64(graph_seed)).choice(n, size=m, replace=False)
        count = undominated_outside(g.rows, n, chosen)
        rows.append(
            DominationRow(trial=trial, set_size=m, undominated_count=count, passed=count <= m)
        )
    logger.info(
        "Domination n={} p={}: {}/{} trials passed", n, p, sum(r.passed for r in rows), trials
    )
    return rows


#: Marks the rows as sampled checks rather than an a.a.s. statement.
DOMINATION_NOTE = "# Monte Carlo check: one sampled graph and one sampled vertex set per row"


def domination_csv(rows: List[DominationRow]) -> str:
    lines = [CSV_SCHEMA_TAG, DOMINATION_NOTE, "trial,set_size,undominated_count,pass"]
    lines += [
        f"{r.trial},{r.set_size},{r.undominated_count},{str(r.passed).lower()}" for r in rows
    ]
    return "\n".join(lines) + "\n"
