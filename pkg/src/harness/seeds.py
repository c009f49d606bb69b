"""Per-trial seed derivation for experiment sweeps."""

from src.defs.exceptions import ParameterError

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One SplitMix64 step: a bijective 64-bit mixer."""
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def trial_seed(seed_base: int, cell: int, trial: int) -> int:
    """Seed for ``trial`` of grid cell ``cell``; distinct (cell, trial) pairs never collide."""
    if not 0 <= cell < (1 << 32) or not 0 <= trial < (1 << 32):
        raise ParameterError(f"cell and trial must fit in 32 bits, got {cell}, {trial}")
    return splitmix64((seed_base & MASK64) ^ ((cell << 32) | trial))
