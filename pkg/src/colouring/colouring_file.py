"""Reading and writing colouring files: header ``n k`` then ``n`` lines ``v c(v)``."""

from typing import Iterable, List, Optional

from src.defs.colouring import Colouring
from src.defs.exceptions import ParameterError, ParseError
from src.utils import content_lines, parse_int_pair


def read_colouring(stream: Iterable[str] | str) -> Colouring:
    """Parse a colouring file.

    Raises:
        ParseError: On malformed lines, vertices out of range or repeated, or colours
            outside ``1..k``; the message names the line number.
    """
    lines = iter(content_lines(stream))
    try:
        lineno, fields = next(lines)
    except StopIteration:
        raise ParseError("line 1: missing header 'n k'")
    n, k = parse_int_pair(lineno, fields, "n k")
    if n < 1 or k < 1:
        raise ParseError(f"line {lineno}: header needs n >= 1 and k >= 1, got {n} {k}")

    colours: List[Optional[int]] = [None] * n
    for lineno, fields in lines:
        v, colour = parse_int_pair(lineno, fields, "v c")
        if not 0 <= v < n:
            raise ParseError(f"line {lineno}: vertex {v} out of range 0..{n - 1}")
        if not 1 <= colour <= k:
            raise ParseError(f"line {lineno}: colour {colour} out of range 1..{k}")
        if colours[v] is not None:
            raise ParseError(f"line {lineno}: vertex {v} coloured twice")
        colours[v] = colour
    missing = [v for v, colour in enumerate(colours) if colour is None]
    if missing:
        raise ParseError(f"colouring leaves {len(missing)} vertices uncoloured, first {missing[0]}")
    try:
        return Colouring(colours, k=k)  # type: ignore[arg-type]
    except ParameterError as e:
        raise ParseError(str(e)) from e


def write_colouring(c: Colouring) -> str:
    lines = [f"{c.n} {c.k}"]
    lines.extend(f"{v} {colour}" for v, colour in enumerate(c.tolist()))
    return "\n".join(lines) + "\n"
