"""Structural digraph algorithms: strong components, topological order,
out-degeneracy, and the distance-spread parameter used by the probe-count
lower bound."""

from __future__ import annotations

import heapq
import math

from .digraph import INF, Digraph, DistanceMatrix, all_pairs_distances


class CyclicGraphError(ValueError):
    """Raised when an operation requires an acyclic digraph."""


class SccDecomposition:
    """Strong components with their acyclic condensation.

    Component ids are assigned in a topological order of the condensation,
    so every condensation arc (i, j) has i < j.
    """

    __slots__ = ("component_of", "components", "condensation")

    def __init__(self, component_of, components, condensation: Digraph):
        self.component_of = tuple(component_of)
        self.components = tuple(tuple(c) for c in components)
        self.condensation = condensation

    def __len__(self) -> int:
        return len(self.components)


def strong_components(g: Digraph) -> SccDecomposition:
    """Tarjan's algorithm (iterative), components renumbered topologically."""
    n = g.n
    index_of = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp_of = [-1] * n
    comps: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index_of[root] != -1:
            continue
        # explicit DFS stack: (vertex, iterator position into out-neighbors)
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index_of[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            out = g.out_neighbors(v)
            while pi < len(out):
                w = out[pi]
                pi += 1
                if index_of[w] == -1:
                    work.append((v, pi))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index_of[w])
            if advanced:
                continue
            if lowlink[v] == index_of[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp_of[w] = len(comps)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])

    # Tarjan emits components in reverse topological order of the condensation.
    k = len(comps)
    comps.reverse()
    comp_of = [k - 1 - c for c in comp_of]
    cond_arcs = {
        (comp_of[u], comp_of[v])
        for (u, v) in g.arcs
        if comp_of[u] != comp_of[v]
    }
    return SccDecomposition(comp_of, comps, Digraph(k, cond_arcs))


def topological_sort(g: Digraph) -> list[int]:
    """Kahn's algorithm; lowest vertex id first among ready vertices.

    Raises :class:`CyclicGraphError` if the digraph has a directed cycle.
    """
    indeg = [g.in_degree(v) for v in range(g.n)]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in g.out_neighbors(u):
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    if len(order) != g.n:
        raise CyclicGraphError("digraph has a directed cycle")
    return order


def is_acyclic(g: Digraph) -> bool:
    try:
        topological_sort(g)
    except CyclicGraphError:
        return False
    return True


def out_degeneracy(g: Digraph) -> int:
    """Largest min-out-degree over all induced subgraphs, by iterative peeling.

    Repeatedly removes a vertex of minimum remaining out-degree (lowest id on
    ties) and returns the largest minimum seen.  Peeling is exact for this
    max-min quantity.
    """
    n = g.n
    alive = [True] * n
    outdeg = [g.out_degree(v) for v in range(n)]
    best = 0
    for _ in range(n):
        u = min(
            (v for v in range(n) if alive[v]),
            key=lambda v: (outdeg[v], v),
        )
        best = max(best, outdeg[u])
        alive[u] = False
        for w in g.in_neighbors(u):
            if alive[w]:
                outdeg[w] -= 1
    return best


def spread_m(g: Digraph, dm: DistanceMatrix | None = None) -> float:
    """Distance-spread parameter: 1 + the largest range of d(u, .) over a
    closed out-neighborhood N+[v], maximized over ordered pairs (u, v).

    Returns INF when some N+[v] mixes reachable and unreachable vertices
    from some u; two unreachable vertices count as spread 0.
    """
    if g.n == 0:
        raise ValueError("spread of the empty digraph is undefined")
    dm = dm or all_pairs_distances(g)
    worst = 0.0
    for v in range(g.n):
        closed = (v, *g.out_neighbors(v))
        for u in range(g.n):
            row = dm.dist[u]
            hi = max(row[w] for w in closed)
            lo = min(row[w] for w in closed)
            if hi == INF:
                if lo == INF:
                    continue
                return INF
            worst = max(worst, hi - lo)
    return int(worst) + 1


def localization_lower_bound(g: Digraph, dm: DistanceMatrix | None = None) -> float:
    """Probe-count lower bound log_M(k+1), with k the out-degeneracy and M
    the distance spread; 0 (vacuous) when M is infinite or the digraph has
    no arcs."""
    k = out_degeneracy(g)
    if k == 0:
        return 0.0
    m = spread_m(g, dm)
    if m == INF:
        return 0.0
    # k >= 1 forces m >= 2: the pair (v, v) already spreads over N+[v].
    return math.log(k + 1) / math.log(m)
