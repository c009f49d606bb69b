"""Helper functions for the tests."""

from typing import FrozenSet, List, Optional, Sequence, Tuple

from src.defs.graph import Graph
from src.graphs.gnp import sample_gnp
from src.harness.seeds import trial_seed


def naive_colour_sets(g: Graph, colours: Sequence[int]) -> List[FrozenSet[int]]:
    """Neighbourhood colour sets straight from the definition."""
    return [frozenset(colours[u] for u in range(g.n) if g.has_edge(v, u)) for v in range(g.n)]


def naive_is_set_colouring(g: Graph, colours: Sequence[int]) -> bool:
    sets = naive_colour_sets(g, colours)
    return all(sets[u] != sets[v] for u, v in g.edge_list())


def naive_first_violation(g: Graph, colours: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Lexicographically smallest edge ``u < v`` with equal colour sets, if any."""
    sets = naive_colour_sets(g, colours)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) and sets[u] == sets[v]:
                return u, v
    return None


def random_corpus(count: int, n_min: int, n_max: int, ps: Sequence[float], seed: int) -> List[Graph]:
    """``count`` seeded graphs with ``n`` cycling through ``n_min..n_max`` and ``p`` through ``ps``."""
    graphs = []
    for i in range(count):
        n = n_min + i % (n_max - n_min + 1)
        p = ps[i % len(ps)]
        graphs.append(sample_gnp(n, p, trial_seed(seed, 0, i)))
    return graphs
