"""File formats: edge-list text, positional labeling files, and graph6.

Edge-list format: first non-comment line is "n m", followed by m lines "u v"
with 0-based vertex indices. Labeling format: m whitespace-separated positive
integers matching edge ids positionally. '#' starts a comment in both.

graph6 follows the standard ASCII encoding; only the single-byte order field
(n <= 62) is supported, which covers every corpus this package targets. The
upper-triangle adjacency bits are read column by column, so a decoded graph
gets edge ids ordered by (larger endpoint, smaller endpoint).
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import ParseError
from .graph import Graph, build_graph
from .labeling import Labeling

GRAPH6_HEADER = ">>graph6<<"
_MAX_G6_VERTICES = 62


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format into a Graph."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {raw.strip()!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {raw.strip()!r}", lineno) from None
        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise ParseError("empty edge-list file")
    n, m = header
    if n < 0 or m < 0:
        raise ParseError(f"header must be non-negative, got {n} {m}")
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges, file contains {len(edges)}")
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_labeling(text: str) -> Labeling:
    """Parse a positional labeling file (comments allowed, order significant)."""
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        for field in line.split():
            try:
                tokens.append(int(field))
            except ValueError:
                raise ParseError(f"expected an integer label, got {field!r}", lineno) from None
    if not tokens:
        raise ParseError("empty labeling file")
    return Labeling(tuple(tokens))


def format_labeling(lab: Labeling) -> str:
    return " ".join(str(x) for x in lab.labels) + "\n"


def graph6_decode(line: str) -> Graph:
    """Decode one graph6 line (optional '>>graph6<<' header tolerated)."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("empty graph6 line")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ParseError(f"graph6 line contains bytes outside ASCII 63..126: {line!r}")
    n = data[0]
    if n == 63:
        raise ParseError("multi-byte graph6 order fields (n > 62) are not supported")
    bits_needed = n * (n - 1) // 2
    body = data[1:]
    if len(body) != (bits_needed + 5) // 6:
        raise ParseError(
            f"graph6 line for n={n} must carry {(bits_needed + 5) // 6} data bytes, got {len(body)}"
        )
    edges: list[tuple[int, int]] = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6]
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    # padding bits must be zero
    if bits_needed % 6:
        byte = body[-1]
        if byte & ((1 << (6 - bits_needed % 6)) - 1):
            raise ParseError(f"graph6 line has non-zero padding bits: {line!r}")
    return build_graph(n, edges)


def graph6_encode(g: Graph) -> str:
    """Encode a Graph as a single graph6 line (n <= 62)."""
    n = g.vertex_count
    if n > _MAX_G6_VERTICES:
        raise ParseError(f"graph6 encoding supports up to {_MAX_G6_VERTICES} vertices, got {n}")
    present = set(g.edges)
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode graph6 lines one at a time, skipping blanks and comments."""
    for line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield graph6_decode(stripped)


def load_graph(path: str) -> Graph:
    """Load a graph file, dispatching on extension (.g6 vs edge list)."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if path.endswith(".g6"):
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return graph6_decode(first)
    return parse_edge_list(text)


def load_labeling(path: str) -> Labeling:
    with open(path, "r", encoding="ascii") as fh:
        return parse_labeling(fh.read())
