"""Utility functions shared across the modules."""

import math
from typing import Iterable, Iterator, List, Tuple

import numpy as np

from src.defs.exceptions import ParameterError, ParseError


def log_product(factors: Iterable[float] | np.ndarray) -> float:
    """Return ``prod(factors)`` computed as ``exp(sum(log(factor)))``.

    Factors must lie in ``(0, inf)``; the log-space sum avoids underflow when many
    factors below one are multiplied.
    """
    arr = np.fromiter(factors, dtype=np.float64)
    if arr.size == 0:
        return 1.0
    if (arr <= 0).any():
        raise ParameterError("log_product needs strictly positive factors")
    return math.exp(math.fsum(np.log(arr).tolist()))


def fmt_float(value: float) -> str:
    """Format a float with 12 significant digits for CSV output."""
    return f"{value:.12g}"


def linear_grid(start: float, stop: float, step: float) -> List[float]:
    """Return ``start, start + step, ..., stop`` (inclusive), rounded to 12 decimals.

    The point count is ``round((stop - start) / step) + 1`` so that floating drift never
    drops or adds the final point.
    """
    if step <= 0:
        raise ParameterError(f"Grid step must be positive, got {step}")
    if stop < start:
        raise ParameterError(f"Grid end {stop} lies before its start {start}")
    count = int(round((stop - start) / step)) + 1
    return [round(start + i * step, 12) for i in range(count)]


def content_lines(stream: Iterable[str] | str) -> Iterator[Tuple[int, List[str]]]:
    """Yield ``(line number, fields)`` for every line that is neither blank nor a ``#`` comment."""
    lines = stream.splitlines() if isinstance(stream, str) else stream
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def parse_int_pair(lineno: int, fields: List[str], what: str) -> Tuple[int, int]:
    """Parse two integer fields or raise a ``ParseError`` naming ``lineno``."""
    if len(fields) != 2:
        raise ParseError(f"line {lineno}: expected '{what}', got {' '.join(fields)!r}")
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(f"line {lineno}: expected two integers, got {' '.join(fields)!r}")


def decode_utf8(data: bytes) -> str:
    """Decode a UTF-8 file body, raising a ``ParseError`` that names the offending line."""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        lineno = data.count(b"\n", 0, e.start) + 1
        raise ParseError(f"line {lineno}: invalid UTF-8 byte 0x{data[e.start]:02x}") from e
