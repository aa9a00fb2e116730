"""Immutable oriented digraphs, directed distances, and graph file formats.

Vertices are dense integers ``0..n-1``.  Graphs are *oriented*: at most one
arc per unordered vertex pair, no self-loops.  Unreachability is represented
by the module-level sentinel :data:`INF` (``math.inf``), which compares equal
only to itself, sorts above every finite distance, and absorbs addition.
"""

from __future__ import annotations

import json
import math
from collections import deque
from pathlib import Path
from typing import Iterable

INF = math.inf


class Digraph:
    """An immutable simple oriented digraph.

    Stores both forward and reverse adjacency so ``N+`` and ``N-`` queries
    are O(1).  Construction validates simplicity and orientation; instances
    are safe to share between threads.
    """

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        arc_set = set()
        out_adj: list[list[int]] = [[] for _ in range(n)]
        in_adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (v, u) in arc_set:
                raise ValueError(f"digon between {u} and {v} (graph must be oriented)")
            if (u, v) in arc_set:
                continue
            arc_set.add((u, v))
            out_adj[u].append(v)
            in_adj[v].append(u)
        self.n = n
        self.arcs = frozenset(arc_set)
        self._out = tuple(tuple(sorted(a)) for a in out_adj)
        self._in = tuple(tuple(sorted(a)) for a in in_adj)

    # -- queries -----------------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def out_neighbors(self, u: int) -> tuple[int, ...]:
        return self._out[u]

    def in_neighbors(self, u: int) -> tuple[int, ...]:
        return self._in[u]

    def out_degree(self, u: int) -> int:
        return len(self._out[u])

    def in_degree(self, u: int) -> int:
        return len(self._in[u])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def is_sink(self, u: int) -> bool:
        return not self._out[u]

    def is_source(self, u: int) -> bool:
        return not self._in[u]

    def is_tournament(self) -> bool:
        """True iff exactly one arc joins every pair of distinct vertices."""
        return len(self.arcs) == self.n * (self.n - 1) // 2 and all(
            (u, v) in self.arcs or (v, u) in self.arcs
            for u in range(self.n)
            for v in range(u + 1, self.n)
        )

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", list[int]]:
        """Induced subgraph on ``vertices``.

        Returns the subgraph (relabeled to ``0..k-1``) together with the
        list mapping new ids back to the original ids.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        arcs = [
            (index[u], index[v])
            for (u, v) in self.arcs
            if u in index and v in index
        ]
        return Digraph(len(keep), arcs), keep

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_count})"


class DistanceMatrix:
    """All-pairs directed distances; ``dist[u][v]`` is INF when v is unreachable from u."""

    __slots__ = ("n", "dist")

    def __init__(self, dist: list[list[float]]):
        self.n = len(dist)
        self.dist = tuple(tuple(row) for row in dist)

    def __getitem__(self, u: int) -> tuple[float, ...]:
        return self.dist[u]


def all_pairs_distances(g: Digraph) -> DistanceMatrix:
    """Shortest directed path lengths via BFS from every vertex."""
    n = g.n
    dist: list[list[float]] = []
    for s in range(n):
        row: list[float] = [INF] * n
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u]
            for v in g.out_neighbors(u):
                if row[v] is INF:
                    row[v] = du + 1
                    queue.append(v)
        dist.append(row)
    return DistanceMatrix(dist)


def diameter(g: Digraph, dm: DistanceMatrix | None = None) -> float:
    """Largest pairwise distance; INF if any ordered pair is unreachable."""
    if g.n == 0:
        raise ValueError("diameter of the empty digraph is undefined")
    dm = dm or all_pairs_distances(g)
    return max(dm.dist[u][v] for u in range(g.n) for v in range(g.n))


# -- file formats ----------------------------------------------------------
#
# Edge-list text: first non-comment line is n, then one "u v" arc per line.
# JSON: {"n": int, "arcs": [[u, v], ...]}.  Both round-trip losslessly.


def to_edge_list(g: Digraph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_arcs())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Digraph:
    n = None
    arcs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            n = int(line)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"malformed arc line: {raw!r}")
        arcs.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise ValueError("edge list is missing the vertex count line")
    return Digraph(n, arcs)


def to_json(g: Digraph) -> str:
    return json.dumps({"n": g.n, "arcs": [list(a) for a in g.sorted_arcs()]})


def from_json(text: str) -> Digraph:
    data = json.loads(text)
    return Digraph(data["n"], [tuple(a) for a in data["arcs"]])


def write_digraph(g: Digraph, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or _format_for(path)
    text = to_json(g) + "\n" if fmt == "json" else to_edge_list(g)
    path.write_text(text)


def read_digraph(path: str | Path, fmt: str | None = None) -> Digraph:
    path = Path(path)
    fmt = fmt or _format_for(path)
    text = path.read_text()
    return from_json(text) if fmt == "json" else from_edge_list(text)


def _format_for(path: Path) -> str:
    return "json" if path.suffix.lower() == ".json" else "edgelist"
