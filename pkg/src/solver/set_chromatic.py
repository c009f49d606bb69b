"""Exact set chromatic number on small graphs."""

from typing import List, Optional, Tuple

from loguru import logger

from src.core.config import Config
from src.defs.colouring import Colouring
from src.defs.enums import SolveStatus
from src.defs.exceptions import ParameterError
from src.defs.graph import Graph
from src.defs.solver import SolveResult
from src.solver.chromatic import BudgetExhausted, chromatic_number


def trivial_lower_bound(chi: int) -> int:
    """``ceil(lg chi + 1)`` computed in integers; equals ``ceil(lg chi) + 1``."""
    return max(1, (chi - 1).bit_length() + 1)


class SetChromaticSolver:
    """Search for set colourings with k = lower, lower + 1, ... colours.

    Colourings are enumerated as restricted growth strings over the vertex order
    ``0..n-1``: the first occurrences of colours appear in increasing order. After
    vertex ``i`` is coloured, every edge whose closed neighbourhoods lie inside
    ``0..i`` is final and is checked; a partial assignment is dropped only on such an
    edge with equal colour sets.
    """

    def __init__(self, g: Graph, *, limit: Optional[int] = None, config: Optional[Config] = None):
        #: Configuration to use.
        self.config: Config = config or Config()
        self.g = g
        self.limit: int = limit if limit is not None else self.config.node_budget
        self.nodes_explored = 0
        masks = g.neighbour_masks()
        self.neighbours: List[List[int]] = [g.neighbours(v).tolist() for v in range(g.n)]
        #: ``closed_at[i]`` lists the edges whose colour sets are fixed once vertex i is coloured.
        self.closed_at: List[List[Tuple[int, int]]] = [[] for _ in range(g.n)]
        for u, v in g.edge_list():
            last = max(masks[u].bit_length(), masks[v].bit_length()) - 1
            self.closed_at[last].append((u, v))

    def _tick(self) -> None:
        self.nodes_explored += 1
        if self.nodes_explored > self.limit:
            raise BudgetExhausted()

    def colour_with(self, k: int) -> Optional[Colouring]:
        """Return a set colouring with at most ``k`` colours, or ``None`` if none exists."""
        n = self.g.n
        assignment = [0] * n

        def colour_set(x: int) -> int:
            bits = 0
            for w in self.neighbours[x]:
                bits |= 1 << assignment[w]
            return bits

        def extend(pos: int, used: int) -> bool:
            self._tick()
            if pos == n:
                return True
            for colour in range(1, min(used + 1, k) + 1):
                assignment[pos] = colour
                if all(colour_set(u) != colour_set(v) for u, v in self.closed_at[pos]):
                    if extend(pos + 1, max(used, colour)):
                        return True
            assignment[pos] = 0
            return False

        if extend(0, 0):
            return Colouring(assignment, k=k)
        return None

    def solve(self, *, allow_large: bool = False) -> SolveResult:
        """Compute chi_s(G) or bounds on it.

        The search starts at ``ceil(lg chi + 1)`` and stops below chi, since any proper
        colouring is a set colouring.

        Raises:
            ParameterError: If ``n`` exceeds the configured maximum and ``allow_large`` is
                not set.
        """
        if self.g.n > self.config.exact_chis_max_n and not allow_large:
            raise ParameterError(
                f"Exact chi_s is limited to n <= {self.config.exact_chis_max_n}, got n={self.g.n}"
            )
        chi = chromatic_number(self.g, self.limit, config=self.config, allow_large=True)
        self.nodes_explored += chi.nodes_explored
        upper, best = chi.upper, chi.witness
        lower = trivial_lower_bound(chi.lower)
        logger.debug("chi_s search on n={}: start bounds [{}, {}]", self.g.n, lower, upper)

        for k in range(lower, upper):
            try:
                found = self.colour_with(k)
            except BudgetExhausted:
                logger.warning("chi_s search budget of {} nodes exhausted at k={}", self.limit, k)
                return SolveResult(
                    status=SolveStatus.Bounded,
                    lower=k,
                    upper=upper,
                    witness=best,
                    nodes_explored=self.nodes_explored,
                )
            if found is not None:
                best, upper = found, k
                break
        return SolveResult(
            status=SolveStatus.Exact,
            value=upper,
            lower=upper,
            upper=upper,
            witness=best,
            nodes_explored=self.nodes_explored,
        )


def set_chromatic_number(
    g: Graph,
    limit: Optional[int] = None,
    *,
    config: Optional[Config] = None,
    allow_large: bool = False,
) -> SolveResult:
    """Exact chi_s(G); budget exhaustion yields a ``Bounded`` result."""
    return SetChromaticSolver(g, limit=limit, config=config).solve(allow_large=allow_large)
