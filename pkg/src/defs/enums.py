from enum import Enum, EnumMeta, auto
from typing import Any

from src.defs.exceptions import SetChromeBaseException


class SetChromeBaseEnumMeta(EnumMeta):
    def __getitem__(cls, name: Any) -> Any:
        """Override __getitem__ to raise a SetChromeBaseException if the KeyError is raised."""
        try:
            return super().__getitem__(name)
        except KeyError:
            raise SetChromeBaseException(f"Invalid {cls.__name__} value: {name}")


class SetChromeBaseEnum(Enum, metaclass=SetChromeBaseEnumMeta):
    """Base enumeration for the project."""

    @classmethod
    def _missing_(cls, value: Any) -> Any:
        """Override _missing_ to raise a SetChromeBaseException if the ValueError is raised."""
        raise SetChromeBaseException(f"Invalid {cls.__name__} value: {value}")


class Regime(SetChromeBaseEnum):
    """Which part of the main theorem a finite (n, p) is read against."""

    DenseConst = "dense-const"
    Polynomial = "polynomial"
    Subpolynomial = "subpolynomial"


class SolveStatus(SetChromeBaseEnum):
    """Outcome of an exact search."""

    #: Search finished; ``value`` is certified.
    Exact = auto()
    #: Budget ran out; only ``[lower, upper]`` is known.
    Bounded = auto()


class SolveMode(SetChromeBaseEnum):
    """Quantity computed by ``solve``."""

    Chi = "chi"
    Chis = "chis"
