"""Resolving sets and metric dimension, plus the pair-distinguishing
hypergraph that links them to covering LPs.

A witness w separates a vertex pair (x, y) when d(w, x) != d(w, y), with
unreachable treated as a distance equal only to itself.  That matches the
probe direction of the game (witness to candidate).  The reverse convention
(candidate to witness) is available behind a flag for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .digraph import INF, Digraph, DistanceMatrix, all_pairs_distances
from .hypergraph import EmptyEdgeError, Hypergraph

CASE_PATH = "case1"
CASE_SOURCE_PLUS_PATH = "case2"
CASE_NO = "no"


@dataclass(frozen=True)
class ResolvingSet:
    vertices: frozenset[int]
    resolved: bool

    def __len__(self) -> int:
        return len(self.vertices)


def is_resolving(dm: DistanceMatrix, witnesses: Iterable[int]) -> bool:
    """True iff no two vertices share their distance vector from the witness set."""
    ws = sorted(set(witnesses))
    if any(not 0 <= w < dm.n for w in ws):
        raise ValueError(f"witnesses {ws} out of range")
    seen = set()
    for x in range(dm.n):
        vec = tuple(dm.dist[w][x] for w in ws)
        if vec in seen:
            return False
        seen.add(vec)
    return True


def metric_dimension_exact(
    g: Digraph, dm: DistanceMatrix | None = None
) -> tuple[int, ResolvingSet]:
    """Smallest resolving set by cardinality-ascending, lexicographic search.

    The witness is the lexicographically least optimum.  The probe set V
    always resolves, so the search terminates at size n; sizes start at 1
    because a resolving set stands for a one-round cop placement.
    """
    if g.n < 1:
        raise ValueError("metric dimension needs at least one vertex")
    dm = dm or all_pairs_distances(g)
    for size in range(1, g.n + 1):
        for ws in combinations(range(g.n), size):
            if is_resolving(dm, ws):
                return size, ResolvingSet(frozenset(ws), True)
    raise AssertionError("the full vertex set always resolves")


def metric_dim_one_classifier(g: Digraph) -> str:
    """Classify whether one witness suffices, and how.

    ``case1``: some start vertex sees distances exactly 0..n-1 and the
    distance order has no forward arc skipping an intermediate vertex.
    ``case2``: some source vertex can be removed to leave a case1 digraph.
    ``no`` otherwise.
    """
    if _has_spine(g):
        return CASE_PATH
    for u in range(g.n):
        if g.is_source(u) and g.n > 1:
            sub, _ = g.induced(v for v in range(g.n) if v != u)
            if _has_spine(sub):
                return CASE_SOURCE_PLUS_PATH
    return CASE_NO


def _has_spine(g: Digraph) -> bool:
    """A start whose distances are 0..n-1 with no skip-forward arc."""
    if g.n == 0:
        return False
    dm = all_pairs_distances(g)
    for s in range(g.n):
        row = dm.dist[s]
        if sorted(row) != list(range(g.n)):
            continue
        order = sorted(range(g.n), key=lambda v: row[v])
        pos = {v: i for i, v in enumerate(order)}
        if all(pos[v] - pos[u] <= 1 for (u, v) in g.arcs):
            return True
    return False


def distinguisher_hypergraph(
    g: Digraph,
    dm: DistanceMatrix | None = None,
    direction: str = "witness-to-pair",
) -> Hypergraph:
    """One labeled hyperedge per vertex pair: the witnesses separating it.

    ``direction="witness-to-pair"`` puts w in edge (x, y) when
    d(w, x) != d(w, y); ``"pair-to-witness"`` compares d(x, w) and d(y, w)
    instead.  Note every edge contains x and y themselves under either
    convention (a vertex is at distance 0 only from itself).
    """
    if direction not in ("witness-to-pair", "pair-to-witness"):
        raise ValueError(f"unknown direction {direction!r}")
    dm = dm or all_pairs_distances(g)
    edges = []
    labels = []
    for x, y in combinations(range(g.n), 2):
        if direction == "witness-to-pair":
            edge = [w for w in range(g.n) if dm.dist[w][x] != dm.dist[w][y]]
        else:
            edge = [w for w in range(g.n) if dm.dist[x][w] != dm.dist[y][w]]
        edges.append(edge)
        labels.append((x, y))
    return Hypergraph(g.n, edges, labels)


def c_parameter(
    g: Digraph,
    dm: DistanceMatrix | None = None,
    direction: str = "witness-to-pair",
) -> Fraction:
    """Worst-case separation rate: min over pairs of |separating set| / n."""
    if g.n < 2:
        return Fraction(1)
    h = distinguisher_hypergraph(g, dm, direction)
    return min(Fraction(len(e), g.n) for e in h.edges)


def lp_upper_bound(g: Digraph, dm: DistanceMatrix | None = None) -> float:
    """Covering bound on the metric dimension: (1 + 2 ln n) / c.

    INF when some pair has no separating witness (c = 0); for distinguisher
    hypergraphs this cannot occur, but the guard mirrors the EmptyEdge
    handling of the LP route.
    """
    try:
        c = c_parameter(g, dm)
    except EmptyEdgeError:
        return INF
    if c == 0:
        return INF
    return (1.0 + 2.0 * math.log(g.n)) / float(c)
