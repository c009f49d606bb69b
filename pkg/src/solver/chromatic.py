"""Exact chromatic number by iterative deepening over the number of colours."""

from typing import List, Optional

from loguru import logger

from src.colouring.greedy import greedy_proper_colouring, largest_first_order
from src.core.config import Config
from src.defs.colouring import Colouring
from src.defs.enums import SolveStatus
from src.defs.exceptions import ParameterError
from src.defs.graph import Graph
from src.defs.solver import SolveResult


class BudgetExhausted(Exception):
    """Raised inside a search when the node budget runs out."""


def greedy_clique(g: Graph) -> List[int]:
    """A maximal clique grown greedily in largest-first order; a lower bound on chi."""
    masks = g.neighbour_masks()
    clique: List[int] = []
    common = (1 << g.n) - 1
    for v in largest_first_order(g).tolist():
        if common >> v & 1:
            clique.append(v)
            common &= masks[v]
    return clique


class ChromaticSolver:
    """Backtracking search for a proper k-colouring, for k = lower, lower + 1, ...

    Vertices are visited in largest-first order. A vertex may take any colour already
    used or exactly one new colour, so every colouring is explored once up to a
    renaming of colours.
    """

    def __init__(self, g: Graph, *, limit: Optional[int] = None, config: Optional[Config] = None):
        #: Configuration to use.
        self.config: Config = config or Config()
        self.g = g
        #: Search budget in explored nodes.
        self.limit: int = limit if limit is not None else self.config.node_budget
        self.nodes_explored = 0
        self.order: List[int] = largest_first_order(g).tolist()
        self.masks: List[int] = g.neighbour_masks()

    def _tick(self) -> None:
        self.nodes_explored += 1
        if self.nodes_explored > self.limit:
            raise BudgetExhausted()

    def colour_with(self, k: int) -> Optional[Colouring]:
        """Return a proper colouring with at most ``k`` colours, or ``None`` if none exists.

        Raises:
            BudgetExhausted: If the node budget runs out first.
        """
        n = self.g.n
        classes = [0] * k
        assignment = [0] * n

        def extend(pos: int, used: int) -> bool:
            self._tick()
            if pos == n:
                return True
            v = self.order[pos]
            neighbours = self.masks[v]
            for colour in range(min(used + 1, k)):
                if classes[colour] & neighbours:
                    continue
                classes[colour] |= 1 << v
                assignment[v] = colour + 1
                if extend(pos + 1, max(used, colour + 1)):
                    return True
                classes[colour] &= ~(1 << v)
            assignment[v] = 0
            return False

        if extend(0, 0):
            return Colouring(assignment, k=k)
        return None

    def solve(self, *, allow_large: bool = False) -> SolveResult:
        """Compute chi(G) or, if the budget runs out, bounds on it.

        Raises:
            ParameterError: If ``n`` exceeds the configured maximum and ``allow_large`` is
                not set.
        """
        if self.g.n > self.config.exact_chi_max_n and not allow_large:
            raise ParameterError(
                f"Exact chi is limited to n <= {self.config.exact_chi_max_n}, got n={self.g.n}"
            )
        lower = max(1, len(greedy_clique(self.g)))
        best = greedy_proper_colouring(self.g, self.order)
        upper = best.k
        logger.debug("chi search on n={}: start bounds [{}, {}]", self.g.n, lower, upper)

        k = lower
        while k < upper:
            try:
                found = self.colour_with(k)
            except BudgetExhausted:
                logger.warning(
                    "chi search budget of {} nodes exhausted at k={}", self.limit, k
                )
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
            k += 1
        return SolveResult(
            status=SolveStatus.Exact,
            value=upper,
            lower=upper,
            upper=upper,
            witness=best,
            nodes_explored=self.nodes_explored,
        )


def chromatic_number(
    g: Graph,
    limit: Optional[int] = None,
    *,
    config: Optional[Config] = None,
    allow_large: bool = False,
) -> SolveResult:
    """Exact chi(G); budget exhaustion yields a ``Bounded`` result, never a wrong value."""
    return ChromaticSolver(g, limit=limit, config=config).solve(allow_large=allow_large)
