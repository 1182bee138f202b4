import random

import pytest

from cuttree.graph import Graph


def random_connected_graph(rng, n, extra_edges=None, wmax=20):
    """Random connected graph: a random spanning tree plus extra edges."""
    if extra_edges is None:
        extra_edges = rng.randrange(0, 2 * n)
    edges = {}
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges[(min(u, v), max(u, v))] = rng.randint(1, wmax)
    for _ in range(extra_edges):
        u, v = rng.sample(range(n), 2)
        edges[(min(u, v), max(u, v))] = rng.randint(1, wmax)
    return Graph(range(n), [(u, v, w) for (u, v), w in edges.items()])


def graph_from_seed(seed, nmax=12, wmax=20):
    rng = random.Random(seed)
    n = rng.randint(2, nmax)
    return random_connected_graph(rng, n, wmax=wmax)


@pytest.fixture
def rng():
    return random.Random(20240817)
