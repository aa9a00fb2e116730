import math

import pytest

from locgame import (
    INF,
    Digraph,
    all_pairs_distances,
    diameter,
    rotation_tournament,
    transitive_tournament,
)
from locgame.digraph import from_edge_list, from_json, to_edge_list, to_json

from conftest import random_oriented_digraph


def cycle3():
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


def floyd_warshall(g):
    d = [[INF] * g.n for _ in range(g.n)]
    for v in range(g.n):
        d[v][v] = 0
    for (u, v) in g.arcs:
        d[u][v] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


class TestDigraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Digraph(2, [(0, 0)])

    def test_rejects_digon(self):
        with pytest.raises(ValueError, match="digon"):
            Digraph(2, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Digraph(2, [(0, 2)])

    def test_adjacency_consistency(self, rng):
        for _ in range(20):
            g = random_oriented_digraph(rng, rng.randint(1, 8), 0.5)
            for u in range(g.n):
                for v in g.out_neighbors(u):
                    assert g.has_arc(u, v)
                    assert u in g.in_neighbors(v)
            assert sum(g.out_degree(v) for v in range(g.n)) == g.arc_count

    def test_tournament_predicate(self):
        assert rotation_tournament(2).is_tournament()
        assert not cycle3() == rotation_tournament(2)
        assert not Digraph(3, [(0, 1)]).is_tournament()

    def test_induced_subgraph(self):
        g = transitive_tournament(4)
        sub, back = g.induced([1, 3])
        assert back == [1, 3]
        assert sub.arcs == frozenset({(0, 1)})


class TestDistances:
    def test_cycle_distances(self):
        dm = all_pairs_distances(cycle3())
        assert dm.dist[0] == (0, 1, 2)

    def test_unreachable_is_inf(self):
        dm = all_pairs_distances(Digraph(2, [(0, 1)]))
        assert dm.dist[1][0] is INF
        assert dm.dist[1][0] == math.inf

    def test_rotation_t5_distance(self):
        dm = all_pairs_distances(rotation_tournament(2))
        assert dm.dist[0][4] == 2

    def test_arc_iff_distance_one(self, rng):
        g = random_oriented_digraph(rng, 7, 0.4)
        dm = all_pairs_distances(g)
        for u in range(7):
            for v in range(7):
                if u != v:
                    assert (dm.dist[u][v] == 1) == g.has_arc(u, v)

    def test_matches_floyd_warshall_oracle(self, rng):
        for _ in range(30):
            g = random_oriented_digraph(rng, rng.randint(1, 8), rng.uniform(0.1, 0.9))
            dm = all_pairs_distances(g)
            oracle = floyd_warshall(g)
            assert [list(row) for row in dm.dist] == oracle

    def test_triangle_inequality(self, rng):
        for _ in range(20):
            g = random_oriented_digraph(rng, rng.randint(2, 8), 0.5)
            dm = all_pairs_distances(g)
            for u in range(g.n):
                for v in range(g.n):
                    for w in range(g.n):
                        assert dm.dist[u][w] <= dm.dist[u][v] + dm.dist[v][w]

    def test_diameter(self):
        assert diameter(cycle3()) == 2
        assert diameter(transitive_tournament(3)) is INF


class TestFileFormats:
    def test_edge_list_round_trip(self, rng):
        g = random_oriented_digraph(rng, 6, 0.5)
        assert from_edge_list(to_edge_list(g)) == g

    def test_json_round_trip(self, rng):
        g = random_oriented_digraph(rng, 6, 0.5)
        assert from_json(to_json(g)) == g

    def test_edge_list_comments_and_blanks(self):
        text = "# oriented triangle\n3\n\n0 1  # first arc\n1 2\n2 0\n"
        assert from_edge_list(text) == cycle3()

    def test_edge_list_requires_header(self):
        with pytest.raises(ValueError, match="vertex count"):
            from_edge_list("# nothing\n")
