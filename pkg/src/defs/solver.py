from typing import Optional

from pydantic import BaseModel, ConfigDict

from src.defs.colouring import Colouring
from src.defs.enums import SolveStatus


class SolveResult(BaseModel):
    """Outcome of an exact chromatic search.

    With ``status == Exact`` the ``value`` is certified and ``witness`` attains it. With
    ``status == Bounded`` the budget ran out; ``value`` is ``None`` and ``witness`` (if
    any) attains ``upper``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    status: SolveStatus
    value: Optional[int] = None
    lower: int
    upper: int
    witness: Optional[Colouring] = None
    nodes_explored: int = 0

    @property
    def is_exact(self) -> bool:
        return self.status == SolveStatus.Exact


class OracleResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    exists_valid: bool
    count_valid: int
