"""Colourings, neighbourhood colour sets and verifier verdicts."""

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.core.config import settings
from src.defs.exceptions import ParameterError


class Colouring:
    """A total assignment of colours ``1..k`` to the vertices ``0..n-1``."""

    __slots__ = ("colours", "k")

    def __init__(self, colours: Sequence[int] | np.ndarray, k: Optional[int] = None):
        arr = np.array(colours, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ParameterError("A colouring needs a non-empty one-dimensional sequence")
        k = int(arr.max()) if k is None else k
        if k < 1:
            raise ParameterError(f"Number of colours must be positive, got k={k}")
        if arr.min() < 1 or arr.max() > k:
            raise ParameterError(f"Colours must lie in 1..{k}")
        arr.flags.writeable = False
        self.colours = arr
        self.k = k

    @property
    def n(self) -> int:
        return int(self.colours.size)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, v: int) -> int:
        return int(self.colours[v])

    def tolist(self) -> List[int]:
        return self.colours.tolist()

    def class_sizes(self) -> np.ndarray:
        """Entry ``i - 1`` is the number of vertices with colour ``i``."""
        return np.bincount(self.colours, minlength=self.k + 1)[1:]

    def used_colours(self) -> int:
        return int(np.count_nonzero(self.class_sizes()))

    def permute_colours(self, perm: Sequence[int]) -> "Colouring":
        """Rename colour ``i`` to ``perm[i - 1]``; ``perm`` is a permutation of ``1..k``."""
        if sorted(perm) != list(range(1, self.k + 1)):
            raise ParameterError(f"Not a permutation of 1..{self.k}")
        lookup = np.concatenate(([0], np.asarray(perm, dtype=np.int64)))
        return Colouring(lookup[self.colours], k=self.k)

    def __repr__(self):
        return f"Colouring(k={self.k}, colours={self.tolist()})"

    def __eq__(self, other):
        if not isinstance(other, Colouring):
            return False
        return self.k == other.k and np.array_equal(self.colours, other.colours)


class ColourSet:
    """The set of colours seen in a neighbourhood, as a bitmask (bit ``i`` for colour ``i``)."""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0 or bits & 1:
            raise ParameterError("Colour sets hold colours 1..k only")
        self.bits = bits

    @classmethod
    def of(cls, colours: Iterable[int]) -> "ColourSet":
        bits = 0
        for colour in colours:
            if colour < 1:
                raise ParameterError(f"Invalid colour {colour}")
            bits |= 1 << colour
        return cls(bits)

    def colours(self) -> List[int]:
        return [i for i in range(1, self.bits.bit_length()) if self.bits >> i & 1]

    def __contains__(self, colour: int) -> bool:
        return colour >= 1 and bool(self.bits >> colour & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __eq__(self, other):
        if not isinstance(other, ColourSet):
            return False
        return self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        return "{" + ", ".join(map(str, self.colours())) + "}"


class ConstructiveParams(BaseModel):
    """Parameters of the block colouring of the upper-bound argument."""

    model_config = ConfigDict(frozen=True)

    #: Slack added to ``r lg n`` blocks.
    omega: int = Field(default=settings.DEFAULT_OMEGA, ge=1)
    #: Edge probability used to derive ``ell0`` and ``r``.
    p: float = Field(gt=0.0, lt=1.0)


class Verdict(BaseModel):
    """Result of a colouring check: valid, or the smallest violating edge."""

    model_config = ConfigDict(frozen=True)

    valid: bool
    edge: Optional[Tuple[int, int]] = None

    def __str__(self) -> str:
        if self.valid:
            return "VALID"
        assert self.edge is not None
        return f"INVALID {self.edge[0]} {self.edge[1]}"
