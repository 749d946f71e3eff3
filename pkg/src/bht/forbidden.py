"""Subgraph containment tests (not necessarily induced) with witnesses.

The detector is a backtracking injective homomorphism search: pattern
vertices are tried in descending-degree order and host candidates in
ascending index, with degree and neighbourhood-bitset pruning.  The
first embedding found under that ordering is the deterministic witness.
Patterns here never exceed seven vertices, so this comfortably beats a
zoo of special-purpose cycle finders.
"""

from __future__ import annotations

from . import families
from .graphs import Graph, bits, is_connected

NAMED_PATTERNS = ("c5", "c6", "theta122", "theta123", "theta124")


def named_pattern(name: str) -> Graph:
    """Materialise one of the five named forbidden patterns."""
    if name == "c5":
        return families.cycle(5)
    if name == "c6":
        return families.cycle(6)
    if name.startswith("theta") and len(name) == 8:
        p, q, r = (int(c) for c in name[5:])
        return families.theta(p, q, r)
    raise ValueError(f"unknown pattern {name!r}")


def as_pattern(pattern: Graph | str) -> Graph:
    g = named_pattern(pattern) if isinstance(pattern, str) else pattern
    if g.m == 0 or not is_connected(g):
        raise ValueError("patterns must be connected with at least one edge")
    return g


def contains_subgraph(g: Graph, pattern: Graph | str) -> list[int] | None:
    """Return an embedding (pattern vertex -> host vertex) or None.

    The embedding maps every pattern edge onto a host edge; injectivity
    is guaranteed.  Vertices of the pattern are matched in descending
    degree order (ties by index), hosts in ascending index, making the
    witness deterministic.
    """
    p = as_pattern(pattern)
    if p.n > g.n or p.m > g.m:
        return None
    order = sorted(range(p.n), key=lambda v: (-p.degree(v), v))
    pdeg = [p.degree(v) for v in order]
    # earlier-ordered pattern neighbours of each ordered vertex
    back: list[list[int]] = []
    for i, v in enumerate(order):
        back.append([j for j in range(i) if p.has_edge(v, order[j])])

    assign = [-1] * p.n  # position in `order` -> host vertex
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == p.n:
            return True
        # hosts adjacent to all previously matched neighbours
        cand = ~used & ((1 << g.n) - 1)
        for j in back[i]:
            cand &= g.adj[assign[j]]
        for h in bits(cand):
            if g.adj[h].bit_count() < pdeg[i]:
                continue
            assign[i] = h
            used |= 1 << h
            if extend(i + 1):
                return True
            used &= ~(1 << h)
        assign[i] = -1
        return False

    if not extend(0):
        return None
    embedding = [-1] * p.n
    for i, v in enumerate(order):
        embedding[v] = assign[i]
    return embedding


def is_free(g: Graph, patterns: list[Graph | str]) -> bool:
    """True iff none of the patterns embeds into g."""
    return all(contains_subgraph(g, p) is None for p in patterns)


def free_filter_stats(g: Graph) -> dict[str, bool]:
    """Freeness of g with respect to each of the five named patterns."""
    return {name: contains_subgraph(g, name) is None for name in NAMED_PATTERNS}


def check_embedding(g: Graph, pattern: Graph | str, embedding: list[int]) -> bool:
    """Validate that an embedding maps pattern edges onto host edges."""
    p = as_pattern(pattern)
    if len(embedding) != p.n or len(set(embedding)) != p.n:
        return False
    return all(g.has_edge(embedding[u], embedding[v]) for u, v in p.edges())
