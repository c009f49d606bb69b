"""Tables of ``s(p)``, ``ell0(p)`` and ``r(p)`` over a grid of probabilities."""

import math
from typing import Iterable, List, Optional

from src.defs.exceptions import DomainError, ParameterError
from src.defs.theory import ZigzagRow
from src.theory.parameters import r_upper, s_and_ell0
from src.utils import fmt_float, linear_grid


def zigzag_row(p: float, n: Optional[int] = None) -> ZigzagRow:
    s, ell0 = s_and_ell0(p)
    upper = None
    if n is not None:
        try:
            upper = r_upper(n, p)
        except DomainError:
            upper = None
    return ZigzagRow(p=p, ell0=ell0, s=s, r=2.0 / math.log2(1.0 / s), r_upper=upper)


def zigzag_rows(ps: Iterable[float], n: Optional[int] = None) -> List[ZigzagRow]:
    return [zigzag_row(p, n) for p in ps]


def zigzag_table(
    p_min: float, p_max: float, step: float, n: Optional[int] = None
) -> List[ZigzagRow]:
    """Rows at ``p_min, p_min + step, ..., p_max``.

    With ``n`` given, each row also carries ``r_upper(n, p)``.

    Raises:
        ParameterError: Unless ``0 < p_min < p_max < 1`` and ``step > 0``.
    """
    if not 0.0 < p_min < p_max < 1.0:
        raise ParameterError(f"Need 0 < p_min < p_max < 1, got {p_min}, {p_max}")
    return zigzag_rows(linear_grid(p_min, p_max, step), n)


def landmark_points(k_max: int) -> List[float]:
    """The points ``p = 1 - (1/2)^(1/k)``, ``k = 1..k_max``, where ``s = 1/2`` and ``r = 2``."""
    if k_max < 1:
        raise ParameterError(f"k_max must be positive, got {k_max}")
    return [1.0 - 0.5 ** (1.0 / k) for k in range(1, k_max + 1)]


def zigzag_csv(rows: List[ZigzagRow], columns: Optional[List[str]] = None) -> str:
    """Render rows as CSV; default columns ``p,ell0,s,r`` plus ``r_upper`` if present."""
    if columns is None:
        columns = ["p", "ell0", "s", "r"]
        if any(row.r_upper is not None for row in rows):
            columns.append("r_upper")
    lines = [",".join(columns)]
    for row in rows:
        cells = []
        for column in columns:
            value = getattr(row, column)
            if value is None:
                cells.append("")
            elif isinstance(value, int):
                cells.append(str(value))
            else:
                cells.append(fmt_float(value))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
