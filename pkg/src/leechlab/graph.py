"""Immutable simple graphs, BFS distances, and exhaustive geodesic enumeration.

A geodesic is a path whose length equals the distance between its endpoints;
single edges are geodesics of length 1, single vertices are not geodesics.
Enumeration is the ground truth every closed-form count in this package is
checked against, so it is deliberately simple: per-source BFS followed by a
walk of the shortest-path predecessor DAG.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .errors import (
    DuplicateEdgeError,
    SelfLoopError,
    VertexOutOfRangeError,
)

INFINITY = math.inf


class Graph:
    """Finite simple undirected graph with dense edge ids.

    Edge ids are 0..m-1 in the order the edges were supplied; that order is
    the positional convention used by labelings and labeling files.
    Instances are immutable and safe to share across threads.
    """

    __slots__ = ("_n", "_edges", "_adj", "_edge_ids")

    def __init__(self, vertex_count: int, edge_list):
        if vertex_count < 0:
            raise VertexOutOfRangeError(f"vertex_count must be >= 0, got {vertex_count}")
        edges: list[tuple[int, int]] = []
        seen: dict[tuple[int, int], int] = {}
        for pair in edge_list:
            u, v = pair
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise VertexOutOfRangeError(
                    f"edge ({u}, {v}) has an endpoint outside [0, {vertex_count})"
                )
            if u == v:
                raise SelfLoopError(f"edge ({u}, {v}) is a self-loop")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"edge ({u}, {v}) duplicates edge id {seen[key]}")
            seen[key] = len(edges)
            edges.append(key)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        for eid, (u, v) in enumerate(edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        object.__setattr__(self, "_n", vertex_count)
        object.__setattr__(self, "_edges", tuple(edges))
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_edge_ids", seen)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as (min, max) vertex pairs, indexed by edge id."""
        return self._edges

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """(neighbor, edge id) pairs of v, sorted by neighbor."""
        self._check_vertex(v)
        return self._adj[v]

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_ids[key]
        except KeyError:
            raise VertexOutOfRangeError(f"no edge ({u}, {v}) in graph") from None

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self._n):
            raise VertexOutOfRangeError(f"vertex {v} outside [0, {self._n})")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={len(self._edges)})"

    def __reduce__(self):
        # keeps instances picklable despite the immutability guard
        return (Graph, (self._n, list(self._edges)))


@dataclass(frozen=True)
class GeodesicPath:
    """A shortest path, stored as the edge-id sequence from the smaller endpoint.

    endpoints is (u, v) with u < v and edge_ids walks from u to v.
    """

    endpoints: tuple[int, int]
    edge_ids: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_ids)


@dataclass(frozen=True)
class GeodesicCensus:
    """Aggregate geodesic statistics for one graph.

    total is the geodesic path number; per_edge[e] counts the geodesics that
    contain edge id e; diameter is the largest finite pairwise distance
    (0 when no two vertices are connected).
    """

    total: int
    by_length: dict[int, int]
    per_edge: tuple[int, ...]
    diameter: int


def build_graph(vertex_count: int, edge_list) -> Graph:
    """Construct a Graph, assigning edge ids in list order.

    Raises SelfLoopError, DuplicateEdgeError, or VertexOutOfRangeError naming
    the offending pair.
    """
    return Graph(vertex_count, edge_list)


def distances(g: Graph, source: int) -> list:
    """Unweighted shortest-path distances from source; INFINITY if unreachable."""
    g._check_vertex(source)
    dist = [INFINITY] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w, _ in g.neighbors(u):
            if dist[w] == INFINITY:
                dist[w] = du + 1
                queue.append(w)
    return dist


def _predecessors(g: Graph, dist: list) -> list[list[tuple[int, int]]]:
    """pred[v] = (neighbor, edge id) pairs one BFS level closer to the source."""
    pred: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for v in range(g.vertex_count):
        dv = dist[v]
        if dv == INFINITY or dv == 0:
            continue
        for w, eid in g.neighbors(v):
            if dist[w] == dv - 1:
                pred[v].append((w, eid))
    return pred


def enumerate_geodesics(g: Graph) -> list[GeodesicPath]:
    """Every geodesic of every unordered reachable vertex pair, exactly once.

    Paths start at the smaller endpoint; output is sorted by
    (min endpoint, max endpoint, edge-id sequence) and is deterministic.
    """
    out: list[GeodesicPath] = []
    for u in range(g.vertex_count):
        dist = distances(g, u)
        pred = _predecessors(g, dist)
        for v in range(u + 1, g.vertex_count):
            if dist[v] == INFINITY or dist[v] < 1:
                continue
            for edge_seq in _paths_back(pred, v, u):
                out.append(GeodesicPath((u, v), tuple(reversed(edge_seq))))
    out.sort(key=lambda p: (p.endpoints, p.edge_ids))
    return out


def _paths_back(pred, v: int, source: int):
    """Edge-id sequences walking the predecessor DAG from v down to source."""
    if v == source:
        yield []
        return
    for w, eid in pred[v]:
        for tail in _paths_back(pred, w, source):
            yield [eid] + tail


def count_geodesics(g: Graph) -> int:
    """Geodesic path number via predecessor-DAG path products, no materialization.

    Must agree with len(enumerate_geodesics(g)); kept separate as a fast
    cross-check for counting-only callers.
    """
    total = 0
    for u in range(g.vertex_count):
        dist = distances(g, u)
        ways = [0] * g.vertex_count
        ways[u] = 1
        order = sorted(
            (v for v in range(g.vertex_count) if dist[v] != INFINITY),
            key=lambda v: dist[v],
        )
        for v in order:
            if v == u:
                continue
            dv = dist[v]
            ways[v] = sum(ways[w] for w, _ in g.neighbors(v) if dist[w] == dv - 1)
        total += sum(
            ways[v]
            for v in range(u + 1, g.vertex_count)
            if dist[v] != INFINITY and dist[v] >= 1
        )
    return total


def census(g: Graph) -> GeodesicCensus:
    """Full geodesic census built from explicit enumeration."""
    paths = enumerate_geodesics(g)
    by_length: dict[int, int] = {}
    per_edge = [0] * g.edge_count
    for p in paths:
        by_length[p.length] = by_length.get(p.length, 0) + 1
        for eid in p.edge_ids:
            per_edge[eid] += 1
    diameter = 0
    for u in range(g.vertex_count):
        for d in distances(g, u):
            if d != INFINITY and d > diameter:
                diameter = d
    return GeodesicCensus(
        total=len(paths),
        by_length=by_length,
        per_edge=tuple(per_edge),
        diameter=int(diameter),
    )
