"""Graph construction, distances, geodesic enumeration, and census."""

import math
import random

import pytest

from leechlab.errors import DuplicateEdgeError, SelfLoopError, VertexOutOfRangeError
from leechlab.families import complete_bipartite, cycle
from leechlab.graph import (
    INFINITY,
    Graph,
    build_graph,
    census,
    count_geodesics,
    distances,
    enumerate_geodesics,
)


def triangle():
    return build_graph(3, [(0, 1), (1, 2), (2, 0)])


class TestBuildGraph:
    def test_triangle_edge_ids_follow_list_order(self):
        g = triangle()
        assert g.vertex_count == 3
        assert g.edges == ((0, 1), (1, 2), (0, 2))
        assert g.edge_id(2, 0) == 2

    def test_four_cycle(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.edge_count == 4
        assert g.degrees() == (2, 2, 2, 2)

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError, match=r"\(0, 0\)"):
            build_graph(3, [(0, 0)])

    def test_duplicate_rejected_even_reversed(self):
        with pytest.raises(DuplicateEdgeError, match=r"\(1, 0\)"):
            build_graph(3, [(0, 1), (1, 0)])

    def test_vertex_out_of_range(self):
        with pytest.raises(VertexOutOfRangeError, match=r"\(0, 3\)"):
            build_graph(3, [(0, 3)])

    def test_immutable(self):
        g = triangle()
        with pytest.raises(AttributeError):
            g.vertex_count = 5


class TestDistances:
    def test_c4_from_zero(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert distances(g, 0) == [0, 1, 2, 1]

    def test_c10_eccentricity_is_five(self):
        g = cycle(10)
        for v in range(10):
            assert max(distances(g, v)) == 5

    def test_unreachable_is_infinite(self):
        g = build_graph(2, [])
        assert distances(g, 0) == [0, INFINITY]
        assert math.isinf(distances(g, 0)[1])

    def test_source_out_of_range(self):
        with pytest.raises(VertexOutOfRangeError):
            distances(triangle(), 3)


class TestEnumerateGeodesics:
    def test_triangle_has_three(self):
        paths = enumerate_geodesics(triangle())
        assert len(paths) == 3
        assert all(p.length == 1 for p in paths)

    def test_c4_has_eight(self):
        paths = enumerate_geodesics(cycle(4))
        assert len(paths) == 8
        by_len = {}
        for p in paths:
            by_len[p.length] = by_len.get(p.length, 0) + 1
        assert by_len == {1: 4, 2: 4}

    def test_k33_has_27(self):
        assert len(enumerate_geodesics(complete_bipartite(3, 3))) == 27

    def test_orientation_and_order_are_canonical(self):
        paths = enumerate_geodesics(cycle(5))
        assert paths == sorted(paths, key=lambda p: (p.endpoints, p.edge_ids))
        assert all(p.endpoints[0] < p.endpoints[1] for p in paths)

    def test_deterministic(self):
        g = cycle(8)
        assert enumerate_geodesics(g) == enumerate_geodesics(g)

    def test_empty_and_edgeless_graphs(self):
        assert enumerate_geodesics(build_graph(0, [])) == []
        assert enumerate_geodesics(build_graph(3, [])) == []


class TestCensus:
    def test_c10_paper_constants(self):
        c = census(cycle(10))
        assert c.total == 50
        assert set(c.per_edge) == {15}
        assert c.diameter == 5

    def test_k33(self):
        c = census(complete_bipartite(3, 3))
        assert c.total == 27
        assert set(c.per_edge) == {5}

    def test_single_edge(self):
        c = census(build_graph(2, [(0, 1)]))
        assert (c.total, c.per_edge, c.diameter) == (1, (1,), 1)
        assert c.by_length == {1: 1}

    def test_total_matches_by_length(self):
        c = census(cycle(9))
        assert c.total == sum(c.by_length.values())

    def test_cycle_per_edge_is_d_triangle(self):
        # every edge of C_n lies on l geodesics of length l, summed to d(d+1)/2
        for n in range(3, 21):
            d = n // 2
            c = census(cycle(n))
            assert set(c.per_edge) == {d * (d + 1) // 2}, n


def random_graph(rng, max_n=8):
    n = rng.randint(1, max_n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [p for p in pairs if rng.random() < rng.choice([0.2, 0.4, 0.7])]
    return build_graph(n, edges)


class TestRandomGraphOracle:
    def test_geodesics_against_bfs(self):
        rng = random.Random(20240817)
        for _ in range(200):
            g = random_graph(rng)
            paths = enumerate_geodesics(g)
            dist_from = {u: distances(g, u) for u in range(g.vertex_count)}
            seen = set()
            for p in paths:
                u, v = p.endpoints
                assert u < v
                # walk the edges: consecutive, no repeated vertex
                at = u
                visited = {u}
                for eid in p.edge_ids:
                    a, b = g.edges[eid]
                    assert at in (a, b)
                    at = b if at == a else a
                    assert at not in visited
                    visited.add(at)
                assert at == v
                assert p.length == dist_from[u][v]
                key = (p.endpoints, p.edge_ids)
                assert key not in seen
                seen.add(key)
            # every reachable pair accounted for, each shortest path once
            assert len(paths) == count_geodesics(g)

    def test_handshake_identity(self):
        rng = random.Random(31137)
        for _ in range(60):
            g = random_graph(rng)
            c = census(g)
            assert sum(c.per_edge) == sum(l * k for l, k in c.by_length.items())

    def test_counting_fast_path_agrees(self):
        rng = random.Random(7)
        for _ in range(60):
            g = random_graph(rng)
            assert count_geodesics(g) == len(enumerate_geodesics(g))


def test_graph_is_picklable():
    import pickle

    g = cycle(6)
    assert pickle.loads(pickle.dumps(g)) == g
