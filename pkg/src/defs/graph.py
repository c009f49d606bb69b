"""Implementation of the packed-row graph class."""

from typing import Annotated, Iterable, List, Sequence, Tuple

import numpy as np
from pydantic import Field

from src.defs.exceptions import ParameterError

#: Largest admissible seed; seeds are 64-bit unsigned integers.
SEED_MAX = 2**64 - 1

#: Seed of the pseudo-random stream behind a sampled graph.
Seed = Annotated[int, Field(ge=0, le=SEED_MAX)]

#: Number of set bits of every byte value.
POPCOUNT = (
    np.unpackbits(np.arange(256, dtype=np.uint8)[:, None], axis=1).sum(axis=1).astype(np.uint8)
)


def row_width(n: int) -> int:
    """Bytes per packed adjacency row."""
    return (n + 7) // 8


def set_bits(rows: np.ndarray, us: np.ndarray, vs: np.ndarray) -> None:
    """Set bit ``v`` of row ``u`` and bit ``u`` of row ``v`` for every pair, in place."""
    np.bitwise_or.at(rows, (us, vs >> 3), np.left_shift(1, vs & 7).astype(np.uint8))
    np.bitwise_or.at(rows, (vs, us >> 3), np.left_shift(1, us & 7).astype(np.uint8))


class Graph:
    """An undirected simple graph on vertices ``0..n-1``.

    Row ``v`` of the adjacency is stored as ``ceil(n / 8)`` bytes with little bit order,
    so bit ``u`` of row ``v`` is set iff ``uv`` is an edge. The rows are read-only once
    the graph is built. No operation materialises the ``n x n`` matrix except
    ``to_dense``.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: np.ndarray):
        if n < 1:
            raise ParameterError(f"Graph needs at least one vertex, got n={n}")
        width = row_width(n)
        if rows.shape != (n, width) or rows.dtype != np.uint8:
            raise ParameterError(f"Expected packed rows of shape {(n, width)}, got {rows.shape}")
        self.n = n
        self.rows = rows
        self.rows.flags.writeable = False

    @classmethod
    def from_dense(cls, adjacency: np.ndarray) -> "Graph":
        """Build a graph from a boolean ``n x n`` matrix.

        Raises:
            ParameterError: If the matrix is not square, not symmetric or has loops.
        """
        adjacency = np.asarray(adjacency, dtype=bool)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise ParameterError(f"Adjacency must be square, got shape {adjacency.shape}")
        if adjacency.diagonal().any():
            raise ParameterError("Adjacency has a loop")
        if not np.array_equal(adjacency, adjacency.T):
            raise ParameterError("Adjacency is not symmetric")
        rows = np.packbits(adjacency, axis=1, bitorder="little")
        return cls(adjacency.shape[0], rows)

    @classmethod
    def from_arrays(cls, n: int, us: np.ndarray, vs: np.ndarray) -> "Graph":
        """Build a graph from endpoint arrays; duplicate pairs collapse.

        Raises:
            ParameterError: On a loop or an endpoint outside ``0..n-1``.
        """
        if n < 1:
            raise ParameterError(f"Graph needs at least one vertex, got n={n}")
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        loops = np.flatnonzero(us == vs)
        if loops.size:
            raise ParameterError(f"Loop at vertex {int(us[loops[0]])}")
        bad = np.flatnonzero((us < 0) | (us >= n) | (vs < 0) | (vs >= n))
        if bad.size:
            u, v = int(us[bad[0]]), int(vs[bad[0]])
            raise ParameterError(f"Edge ({u}, {v}) out of range for n={n}")
        rows = np.zeros((n, row_width(n)), dtype=np.uint8)
        set_bits(rows, us, vs)
        return cls(n, rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from unordered pairs; duplicates collapse."""
        pairs = np.array(list(edges), dtype=np.int64).reshape(-1, 2)
        return cls.from_arrays(n, pairs[:, 0], pairs[:, 1])

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, [])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        us, vs = np.triu_indices(n, k=1)
        return cls.from_arrays(n, us, vs)

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_arrays(n, np.arange(n - 1), np.arange(1, n))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ParameterError(f"A cycle needs at least 3 vertices, got n={n}")
        return cls.from_arrays(n, np.arange(n), (np.arange(n) + 1) % n)

    def to_dense(self) -> np.ndarray:
        """Unpack into a boolean ``n x n`` matrix; meant for small graphs."""
        return np.unpackbits(self.rows, axis=1, count=self.n, bitorder="little").astype(bool)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u, v >> 3] >> (v & 7)) & 1)

    def row(self, v: int) -> np.ndarray:
        """Row ``v`` unpacked into ``n`` booleans."""
        return np.unpackbits(self.rows[v], count=self.n, bitorder="little").astype(bool)

    def neighbours(self, v: int) -> np.ndarray:
        """Sorted neighbours of ``v``."""
        return np.flatnonzero(self.row(v))

    def neighbour_masks(self) -> List[int]:
        """Row ``v`` as a Python integer bitmask (bit ``u`` set iff ``uv`` is an edge)."""
        return [int.from_bytes(row.tobytes(), "little") for row in self.rows]

    def degrees(self) -> np.ndarray:
        degrees = np.zeros(self.n, dtype=np.int64)
        for start in range(0, self.n, 1024):
            block = self.rows[start : start + 1024]
            degrees[start : start + block.shape[0]] = POPCOUNT[block].sum(axis=1)
        return degrees

    def max_degree(self) -> int:
        return int(self.degrees().max())

    def edges(self) -> Tuple[np.ndarray, np.ndarray]:
        """Endpoints ``(us, vs)`` of all edges with ``u < v``, in lexicographic order."""
        us: List[np.ndarray] = []
        vs: List[np.ndarray] = []
        for u in range(self.n):
            later = self.neighbours(u)
            later = later[later > u]
            us.append(np.full(later.size, u, dtype=np.int64))
            vs.append(later)
        return np.concatenate(us), np.concatenate(vs).astype(np.int64)

    def edge_list(self) -> List[Tuple[int, int]]:
        us, vs = self.edges()
        return list(zip(us.tolist(), vs.tolist()))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        perm_arr = np.asarray(perm, dtype=np.int64)
        if sorted(perm_arr.tolist()) != list(range(self.n)):
            raise ParameterError("Relabelling is not a permutation of the vertices")
        us, vs = self.edges()
        return Graph.from_arrays(self.n, perm_arr[us], perm_arr[vs])

    def __repr__(self):
        return f"Graph(n={self.n}, m={int(self.degrees().sum()) // 2})"

    def __eq__(self, other):
        """Return True if the two graphs have identical adjacency."""
        if not isinstance(other, Graph):
            return False
        return self.n == other.n and np.array_equal(self.rows, other.rows)

    def __hash__(self):
        return hash((self.n, self.rows.tobytes()))
