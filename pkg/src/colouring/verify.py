"""Neighbourhood colour sets and the set/proper colouring verifiers."""

from typing import List

import numpy as np

from src.defs.colouring import Colouring, ColourSet, Verdict
from src.defs.exceptions import ParameterError
from src.defs.graph import Graph


def _check_lengths(g: Graph, c: Colouring) -> None:
    if c.n != g.n:
        raise ParameterError(f"Colouring has {c.n} entries, graph has {g.n} vertices")


def colour_set_matrix(g: Graph, c: Colouring) -> np.ndarray:
    """Boolean ``n x k`` matrix; entry ``(v, i)`` says colour ``i + 1`` is in ``C(v)``.

    Each column is one masked scan of the packed adjacency rows against the packed
    membership vector of a colour class.
    """
    _check_lengths(g, c)
    sets = np.zeros((g.n, c.k), dtype=bool)
    for colour in range(1, c.k + 1):
        members = c.colours == colour
        if not members.any():
            continue
        mask = np.packbits(members, bitorder="little")
        sets[:, colour - 1] = (g.rows & mask).any(axis=1)
    return sets


def neighbourhood_colour_sets(g: Graph, c: Colouring) -> List[ColourSet]:
    """``C(v) = {c(u) : uv in E}`` for every vertex ``v``.

    Raises:
        ParameterError: If the colouring length differs from ``g.n``.
    """
    sets = colour_set_matrix(g, c)
    # Column 0 stands for the unused bit 0 of ColourSet.
    shifted = np.hstack([np.zeros((g.n, 1), dtype=bool), sets])
    packed = np.packbits(shifted, axis=1, bitorder="little")
    return [ColourSet(int.from_bytes(row.tobytes(), "little")) for row in packed]


def _first_violation(same: np.ndarray, us: np.ndarray, vs: np.ndarray) -> Verdict:
    if not same.any():
        return Verdict(valid=True)
    i = int(np.argmax(same))
    return Verdict(valid=False, edge=(int(us[i]), int(vs[i])))


def is_set_colouring(g: Graph, c: Colouring) -> Verdict:
    """Check ``C(u) != C(v)`` on every edge; report the lexicographically smallest failure."""
    codes = np.packbits(colour_set_matrix(g, c), axis=1, bitorder="little")
    us, vs = g.edges()
    same = (codes[us] == codes[vs]).all(axis=1)
    return _first_violation(same, us, vs)


def is_proper_colouring(g: Graph, c: Colouring) -> Verdict:
    """Check ``c(u) != c(v)`` on every edge; report the lexicographically smallest failure."""
    _check_lengths(g, c)
    us, vs = g.edges()
    same = c.colours[us] == c.colours[vs]
    return _first_violation(same, us, vs)
