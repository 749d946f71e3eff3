"""Shared oracles and generators for the test suite."""

from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest

from bht.graphs import Graph, from_edge_list


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """All-permutations isomorphism oracle (n <= 8)."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    for perm in permutations(range(g.n)):
        if all(
            (g.adj[u] >> v & 1) == (h.adj[perm[u]] >> perm[v] & 1)
            for u in range(g.n)
            for v in range(u + 1, g.n)
        ):
            return True
    return False


def brute_contains(host: Graph, pattern: Graph) -> bool:
    """Exhaustive injective-map subgraph oracle (small sizes only)."""
    if pattern.n > host.n:
        return False
    edges = pattern.edges()
    for sub in combinations(range(host.n), pattern.n):
        for perm in permutations(sub):
            if all(host.adj[perm[u]] >> perm[v] & 1 for u, v in edges):
                return True
    return False


def random_connected(rng: random.Random, n_lo: int = 4, n_hi: int = 14,
                     extra_hi: int = 6) -> Graph:
    """Random connected graph: random spanning tree plus extra edges."""
    n = rng.randint(n_lo, n_hi)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    for _ in range(rng.randint(0, extra_hi)):
        a, b = rng.sample(range(n), 2)
        edges.add((min(a, b), max(a, b)))
    return from_edge_list(sorted(edges))


def random_bipartite_connected(rng: random.Random, n_lo: int = 4, n_hi: int = 14) -> Graph:
    """Random connected bipartite graph (hence triangle-free)."""
    while True:
        n = rng.randint(n_lo, n_hi)
        a = rng.randint(1, n - 1)
        edges = set()
        for left in range(a):
            right = rng.randrange(a, n)
            edges.add((left, right))
        for right in range(a, n):
            left = rng.randrange(a)
            edges.add((left, right))
        for _ in range(rng.randint(0, 8)):
            left, right = rng.randrange(a), rng.randrange(a, n)
            edges.add((left, right))
        g = from_edge_list(sorted(edges))
        from bht.graphs import is_connected

        if g.n == n and is_connected(g):
            return g


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0x5EED)
