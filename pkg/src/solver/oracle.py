"""Exhaustive set-colouring oracle for tests and cross-checks."""

from typing import Optional

import numpy as np

from src.core.config import Config
from src.defs.exceptions import OracleRefusal
from src.defs.graph import Graph
from src.defs.solver import OracleResult

#: Assignments checked per vectorised batch.
BATCH = 1 << 14


def brute_force_oracle(g: Graph, k: int, *, config: Optional[Config] = None) -> OracleResult:
    """Check all ``k^n`` assignments and count the set colourings among them.

    Assignment ``a`` colours vertex ``v`` with digit ``v`` of ``a`` in base ``k``, plus one.

    Raises:
        OracleRefusal: If ``k^n`` exceeds the configured cap or ``k < 1``.
    """
    config = config or Config()
    if k < 1:
        raise OracleRefusal(f"k must be positive, got {k}")
    total = k**g.n
    if total > config.oracle_assignment_cap:
        raise OracleRefusal(f"{k}^{g.n} assignments exceed the cap {config.oracle_assignment_cap}")

    dense = g.to_dense().astype(np.int64)
    us, vs = g.edges()
    place = k ** np.arange(g.n, dtype=np.int64)
    palette = np.arange(k)
    count = 0
    for start in range(0, total, BATCH):
        idx = np.arange(start, min(total, start + BATCH), dtype=np.int64)
        digits = (idx[:, None] // place) % k
        onehot = (digits[..., None] == palette).astype(np.int64)
        sets = np.matmul(dense, onehot) > 0
        if us.size == 0:
            count += idx.size
            continue
        distinguished = (sets[:, us, :] != sets[:, vs, :]).any(axis=2)
        count += int(distinguished.all(axis=1).sum())
    return OracleResult(exists_valid=count > 0, count_valid=count)


def oracle_set_chromatic_number(g: Graph, *, config: Optional[Config] = None) -> int:
    """Smallest ``k`` for which the oracle finds a set colouring."""
    k = 1
    while not brute_force_oracle(g, k, config=config).exists_valid:
        k += 1
    return k
