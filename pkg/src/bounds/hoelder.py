"""Check of the weighted ratio inequality behind the Delta estimate.

For ``x_i`` in ``[1/2, 1]`` with weights ``beta_i > 0`` let ``a_i = x_i^2 + (1-x_i)^2``
and ``s`` the weighted geometric mean of the ``a_i``. Then
``prod (x_i^3 + (1-x_i)^3)^beta_i / prod a_i^beta_i <= ((3s - 1) / (2s))^(sum beta_i)``
with equality when all ``x_i`` coincide. Unit weights give the product form.
"""

import math
from typing import Optional, Sequence

import numpy as np

from src.core.config import Config
from src.defs.bounds import HoelderCheck
from src.defs.exceptions import ParameterError


def hoelder_ratio_check(
    x: Sequence[float], beta: Sequence[float], *, config: Optional[Config] = None
) -> HoelderCheck:
    """Evaluate both sides for one tuple.

    Raises:
        ParameterError: If lengths differ, ``x`` leaves ``[1/2, 1]`` or a weight is not
            positive.
    """
    config = config or Config()
    xs = np.asarray(x, dtype=np.float64)
    betas = np.asarray(beta, dtype=np.float64)
    if xs.ndim != 1 or xs.size == 0 or xs.shape != betas.shape:
        raise ParameterError("x and beta must be non-empty sequences of equal length")
    if (xs < 0.5).any() or (xs > 1.0).any():
        raise ParameterError("every x_i must lie in [1/2, 1]")
    if (betas <= 0).any():
        raise ParameterError("every beta_i must be positive")

    squares = xs**2 + (1.0 - xs) ** 2
    cubes = xs**3 + (1.0 - xs) ** 3
    weight = math.fsum(betas.tolist())
    log_squares = math.fsum((betas * np.log(squares)).tolist())
    log_cubes = math.fsum((betas * np.log(cubes)).tolist())

    s = math.exp(log_squares / weight)
    lhs = math.exp(log_cubes - log_squares)
    rhs = ((3.0 * s - 1.0) / (2.0 * s)) ** weight
    z = (1.0 + math.sqrt(max(2.0 * s - 1.0, 0.0))) / 2.0
    return HoelderCheck(lhs=lhs, rhs=rhs, s=s, z=z, holds=lhs <= rhs + config.tolerance)
