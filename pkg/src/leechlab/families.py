"""Deterministic generators for the graph families under study.

Edge-order conventions are normative because labeling files are positional:

  cycle(n)                 edge i joins vertices i and (i+1) mod n
  complete(n)              lexicographic pairs (0,1), (0,2), ..., (n-2,n-1)
  complete_minus_edge(n)   complete(n) without the pair (0,1)
  complete_bipartite(m,n)  side A is 0..m-1, side B is m..m+n-1, pairs in
                           lexicographic order (0,m), (0,m+1), ...
  path(n)                  edge i joins vertices i and i+1
  wheel(n)                 rim 0..n-2 in cycle order (edge ids 0..n-2), hub
                           n-1, spokes (i, hub) afterwards in rim order
  prism()                  triangle 0,1,2, triangle 3,4,5, then the matching

The nine minimal forbidden subgraphs of line graphs and the catalog of all
connected graphs on 2..5 vertices ship as graph6 assets with checksums, so
the census experiments run without an external graph database.
"""

from __future__ import annotations

import hashlib
import json
from importlib import resources

from .errors import CatalogMissingError, TooSmallError
from .graph import Graph, build_graph
from .graphio import graph6_decode


def cycle(n: int) -> Graph:
    if n < 3:
        raise TooSmallError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise TooSmallError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise TooSmallError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_minus_edge(n: int) -> Graph:
    if n < 2:
        raise TooSmallError(f"complete-minus-edge needs n >= 2, got {n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) != (0, 1)]
    return build_graph(n, edges)


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise TooSmallError(f"complete bipartite needs both sides >= 1, got {m}, {n}")
    return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def wheel(n: int) -> Graph:
    """Wheel on n vertices total: a cycle on n-1 vertices plus a hub."""
    if n < 4:
        raise TooSmallError(f"wheel needs n >= 4 vertices, got {n}")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges.extend((i, rim) for i in range(rim))
    return build_graph(n, edges)


def prism() -> Graph:
    """Triangular prism: two triangles joined by a perfect matching (cubic)."""
    return build_graph(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )


def _load_asset(filename: str) -> tuple[list[str], dict]:
    data_dir = resources.files(__package__) / "data"
    try:
        manifest = json.loads((data_dir / "manifest.json").read_text(encoding="ascii"))
        raw = (data_dir / filename).read_bytes()
    except (FileNotFoundError, OSError, json.JSONDecodeError) as exc:
        raise CatalogMissingError(f"bundled asset {filename} unavailable: {exc}") from exc
    try:
        entry = manifest["files"][filename]
    except KeyError:
        raise CatalogMissingError(f"{filename} missing from asset manifest") from None
    digest = hashlib.sha256(raw).hexdigest()
    if digest != entry["sha256"]:
        raise CatalogMissingError(
            f"{filename} checksum mismatch: expected {entry['sha256']}, got {digest}"
        )
    lines = [ln for ln in raw.decode("ascii").splitlines() if ln.strip()]
    if len(lines) != entry["count"]:
        raise CatalogMissingError(
            f"{filename} carries {len(lines)} graphs, manifest promises {entry['count']}"
        )
    return lines, entry


def beineke_graphs() -> list[tuple[str, Graph]]:
    """The nine minimal forbidden subgraphs of line graphs, claw first.

    Returns (stable name, graph) pairs in the bundled canonical order.
    """
    lines, entry = _load_asset("beineke.g6")
    names = entry["names"]
    if len(names) != len(lines):
        raise CatalogMissingError("beineke.g6 name list does not match graph count")
    return [(name, graph6_decode(line)) for name, line in zip(names, lines)]


def small_connected_catalog(max_n: int = 5) -> list[Graph]:
    """Every connected graph on 2..max_n vertices, once per isomorphism class.

    Only orders up to 5 are bundled.
    """
    if not 2 <= max_n <= 5:
        raise ValueError(f"catalog is bundled for 2 <= max_n <= 5, got {max_n}")
    lines, _ = _load_asset("small_connected_2_5.g6")
    graphs = [graph6_decode(line) for line in lines]
    return [g for g in graphs if g.vertex_count <= max_n]
