import random

import pytest

from locgame import Digraph


def random_oriented_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, arcs)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
