"""Generators for the digraph families used throughout the package.

All constructors are pure and deterministic; the random tournament takes an
explicit 64-bit seed.  Vertex labelings are documented per family so tests
and file outputs can name vertices.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .digraph import Digraph


def rotation_tournament(m: int) -> Digraph:
    """Circulant tournament on 2m+1 vertices: arcs i -> i+1, ..., i+m (mod 2m+1)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    n = 2 * m + 1
    arcs = [(i, (i + j) % n) for i in range(n) for j in range(1, m + 1)]
    return Digraph(n, arcs)


def tripartite_cycle(i: int) -> Digraph:
    """Three independent sets of size i wired cyclically.

    Part j occupies vertices {j*i, ..., j*i + i - 1}; every vertex of part j
    has an arc to every vertex of part (j+1) mod 3.
    """
    if i < 1:
        raise ValueError(f"part size must be positive, got {i}")
    arcs = []
    for j in range(3):
        src = range(j * i, j * i + i)
        dst = range(((j + 1) % 3) * i, ((j + 1) % 3) * i + i)
        arcs.extend((u, v) for u in src for v in dst)
    return Digraph(3 * i, arcs)


def blowup(t: Digraph, k: int) -> Digraph:
    """Replace each vertex v of a tournament by an independent set I_v of size k.

    I_v = {v*k, ..., v*k + k - 1}; an arc joins x in I_u to y in I_v exactly
    when (u, v) is an arc of the base tournament.
    """
    if k < 3:
        raise ValueError(f"independent-set size must be at least 3, got {k}")
    if not t.is_tournament():
        raise ValueError("blowup base must be a tournament")
    arcs = [
        (u * k + a, v * k + b)
        for (u, v) in t.arcs
        for a in range(k)
        for b in range(k)
    ]
    return Digraph(t.n * k, arcs)


def sc_tight(m: int, delta: int) -> Digraph:
    """Layered circulant digraph whose localization number meets the
    strong-component upper bound.

    Vertices are (u, layer) with u in Z_{2m+1} and layer in 1..delta+1,
    flattened as (layer-1)*(2m+1) + u.  Every layer induces the circulant
    tournament on 2m+1 vertices; layer 1 additionally sends its forward
    arcs into every other layer, making it the unique source component.

    m must be odd.  The bound is known to be met only when delta is small
    relative to m (roughly delta*zeta(layer) <= (m+1)/2); larger deltas are
    generated but carry no exactness guarantee.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be odd and positive, got {m}")
    if delta < 1:
        raise ValueError(f"delta must be positive, got {delta}")
    n_layer = 2 * m + 1
    arcs = []

    def vid(u: int, layer: int) -> int:
        return (layer - 1) * n_layer + u

    for layer in range(1, delta + 2):
        for u in range(n_layer):
            for j in range(1, m + 1):
                w = (u + j) % n_layer
                if layer == 1:
                    arcs.extend((vid(u, 1), vid(w, l2)) for l2 in range(1, delta + 2))
                else:
                    arcs.append((vid(u, layer), vid(w, layer)))
    return Digraph(n_layer * (delta + 1), arcs)


def binary_source_extension(d: Digraph) -> Digraph:
    """Add ceil(log2(m)) source vertices wired by binary labels.

    Vertex u < m carries the width-b binary string of u (coordinate 0 is the
    most significant bit); added source m+i has an arc to every original
    vertex whose coordinate i is 0.  For m = 1 the digraph is returned
    unchanged.
    """
    m = d.n
    if m < 1:
        raise ValueError("base digraph must have at least one vertex")
    b = math.ceil(math.log2(m)) if m > 1 else 0
    if b == 0:
        return d
    arcs = list(d.arcs)
    for i in range(b):
        source = m + i
        for u in range(m):
            if format(u, f"0{b}b")[i] == "0":
                arcs.append((source, u))
    return Digraph(m + b, arcs)


def paley_tournament(q: int) -> Digraph:
    """Quadratic-residue tournament on Z_q: arc (i, j) iff j-i is a nonzero square.

    Requires q prime with q = 3 (mod 4), which makes exactly one of x, -x a
    residue for every nonzero x.  Prime powers are not supported.
    """
    if q < 3 or not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q % 4 != 3:
        raise ValueError(f"q must be 3 mod 4, got {q}")
    residues = {(x * x) % q for x in range(1, q)}
    arcs = [
        (i, j)
        for i in range(q)
        for j in range(q)
        if i != j and (j - i) % q in residues
    ]
    return Digraph(q, arcs)


def random_tournament(n: int, p: float, seed: int) -> Digraph:
    """Seeded random tournament: arc (i, j) with probability p for each i < j,
    else (j, i).  Pairs are drawn in lexicographic order from one stream, so
    a seed pins the whole tournament."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= p <= 1:
        raise ValueError(f"p must be a probability, got {p}")
    rng = random.Random(seed)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            arcs.append((i, j) if rng.random() < p else (j, i))
    return Digraph(n, arcs)


def transitive_tournament(n: int) -> Digraph:
    """All arcs point from lower to higher id."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


# -- named family registry (CLI and FamilySpec) ----------------------------

FAMILIES: dict[str, tuple[tuple[str, ...], object]] = {
    "rotation": (("m",), rotation_tournament),
    "d3": (("i",), tripartite_cycle),
    "blowup": (("j", "k"), lambda j, k: blowup(rotation_tournament(j), k)),
    "sc_tight": (("m", "delta"), sc_tight),
    "paley": (("q",), paley_tournament),
    "transitive": (("n",), transitive_tournament),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance: id, integer parameters, optional seed.

    ``random`` uses (n,) plus a probability and seed; the purely parametric
    families ignore both.
    """

    family: str
    params: tuple[int, ...] = ()
    p: float | None = None
    seed: int | None = None

    def build(self) -> Digraph:
        if self.family == "random":
            if len(self.params) != 1 or self.p is None:
                raise ValueError("random family needs params=(n,) and p")
            return random_tournament(self.params[0], self.p, self.seed or 0)
        if self.family not in FAMILIES:
            known = sorted(FAMILIES) + ["random"]
            raise ValueError(f"unknown family {self.family!r}; known: {known}")
        names, ctor = FAMILIES[self.family]
        if len(self.params) != len(names):
            raise ValueError(
                f"{self.family} expects parameters {names}, got {self.params}"
            )
        return ctor(*self.params)
