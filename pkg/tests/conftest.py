"""Shared fixtures: small named graphs, censuses, and independent oracles."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import pytest

from matchext import Graph


# -- small named graphs -------------------------------------------------------

def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))

def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])

def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])

def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])

def empty(n: int) -> Graph:
    return Graph(n, [])

def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.order
    return Graph(offset, edges)


# -- independent matching oracle (recursion over edges, no package code) ------

def brute_force_nu(g: Graph) -> int:
    edges = g.edges

    def rec(i: int, used: int) -> int:
        if i >= len(edges):
            return 0
        best = rec(i + 1, used)
        u, v = edges[i]
        pair = (1 << u) | (1 << v)
        if not used & pair:
            best = max(best, 1 + rec(i + 1, used | pair))
        return best

    return rec(0, 0)


# -- censuses ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _atlas_graphs() -> tuple:
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for nxg in graph_atlas_g()[1:]:
        order = nxg.number_of_nodes()
        ids = {node: i for i, node in enumerate(sorted(nxg.nodes()))}
        g = Graph(order, [(ids[u], ids[v]) for u, v in nxg.edges()])
        connected = order > 0 and nx.is_connected(nxg)
        out.append((g, connected))
    return tuple(out)


def connected_census(max_order: int = 7) -> list[Graph]:
    """Every connected graph up to isomorphism with at most ``max_order``
    vertices (orders 1..7 supported via the standard atlas)."""
    return [g for g, conn in _atlas_graphs() if conn and g.order <= max_order]


def random_graph(rng: random.Random, order: int, p: float) -> Graph:
    edges = [e for e in combinations(range(order), 2) if rng.random() < p]
    return Graph(order, edges)


def random_sample(count: int, orders, seed: int) -> list[Graph]:
    """Fixed-seed random graphs with mixed densities."""
    rng = random.Random(seed)
    orders = list(orders)
    out = []
    while len(out) < count:
        order = rng.choice(orders)
        p = rng.uniform(0.1, 0.9)
        out.append(random_graph(rng, order, p))
    return out


def disconnected_sample(count: int, seed: int, max_order: int = 7) -> list[Graph]:
    """Fixed-seed disconnected graphs built as disjoint unions of two random
    parts (the interesting edge-deletion families are disconnected)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        order = rng.randint(4, max_order)
        left = rng.randint(1, order - 1)
        g = disjoint_union(
            random_graph(rng, left, rng.uniform(0.2, 0.9)),
            random_graph(rng, order - left, rng.uniform(0.2, 0.9)),
        )
        out.append(g)
    return out


@pytest.fixture(scope="session")
def census7() -> list[Graph]:
    return connected_census(7)


@pytest.fixture(scope="session")
def census6() -> list[Graph]:
    return connected_census(6)


@pytest.fixture(scope="session")
def order8_sample() -> list[Graph]:
    return random_sample(500, [8], seed=88)


@pytest.fixture(scope="session")
def mixed_sample8() -> list[Graph]:
    return random_sample(1000, range(1, 9), seed=1007)


@pytest.fixture(scope="session")
def disconnected1000() -> list[Graph]:
    return disconnected_sample(1000, seed=4242)
