"""Reading and writing the edge-list text format.

The format is a header line ``n m`` followed by ``m`` lines ``u v`` with
``0 <= u < v < n``. Blank lines and lines starting with ``#`` are ignored.
"""

from typing import Iterable, Set, Tuple

from src.defs.exceptions import ParseError
from src.defs.graph import Graph
from src.utils import content_lines, parse_int_pair


def read_edge_list(stream: Iterable[str] | str) -> Graph:
    """Parse an edge list into a graph.

    Raises:
        ParseError: On a malformed line, out-of-range vertex, duplicate edge or loop; the
            message names the offending line number.
    """
    lines = iter(content_lines(stream))
    try:
        lineno, fields = next(lines)
    except StopIteration:
        raise ParseError("line 1: missing header 'n m'")
    n, m = parse_int_pair(lineno, fields, "n m")
    if n < 1 or m < 0:
        raise ParseError(f"line {lineno}: header needs n >= 1 and m >= 0, got {n} {m}")

    seen: Set[Tuple[int, int]] = set()
    last_lineno = lineno
    for lineno, fields in lines:
        last_lineno = lineno
        u, v = parse_int_pair(lineno, fields, "u v")
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1} in edge {u} {v}")
        if u > v:
            raise ParseError(f"line {lineno}: edge must be written with u < v, got {u} {v}")
        if (u, v) in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        if len(seen) == m:
            raise ParseError(f"line {lineno}: more than the {m} edges announced in the header")
        seen.add((u, v))
    if len(seen) != m:
        raise ParseError(f"line {last_lineno}: header announces {m} edges, found {len(seen)}")
    return Graph.from_edges(n, seen)


def write_edge_list(g: Graph) -> str:
    """Render ``g`` in canonical form: edges sorted lexicographically."""
    edges = g.edge_list()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
