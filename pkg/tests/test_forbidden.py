"""Subgraph containment: witnesses, brute-force agreement, implications."""

import pytest

from bht import families as F
from bht import forbidden as FB
from conftest import brute_contains, random_connected


def test_identity_witness():
    emb = FB.contains_subgraph(F.cycle(5), "c5")
    assert emb == [0, 1, 2, 3, 4]


def test_too_small_host():
    assert FB.contains_subgraph(F.complete(4), "c5") is None


def test_book_is_pattern_free():
    assert FB.contains_subgraph(F.book(9), "c5") is None
    assert FB.is_free(F.book(9), ["c5", "c6", "theta123", "theta124"])


def test_known_containments():
    assert FB.is_free(F.star_matching(9, 1), ["theta122", "theta123"])
    # K2 v 3K1 contains K2 v 2K1
    host = F.join(F.complete(2), F.empty(3))
    assert FB.contains_subgraph(host, "theta122") is not None
    for tree in (F.star(8), F.path(9), F.double_star(3, 4)):
        assert FB.is_free(tree, ["c5", "c6"])


def test_free_filter_stats_examples():
    stats = FB.free_filter_stats(F.r_chain(2))
    assert stats["c5"] and stats["c6"] and not stats["theta122"]
    stats = FB.free_filter_stats(F.cycle(6))
    assert stats["c5"] and not stats["c6"]
    # the 1-2-4 theta graph holds a 6-cycle (its 2-path plus 4-path)
    assert FB.contains_subgraph(F.theta(1, 2, 4), "c6") is not None


def test_witness_validity_on_random_graphs(rng):
    hits = 0
    for _ in range(120):
        g = random_connected(rng, 5, 10)
        for name in FB.NAMED_PATTERNS:
            emb = FB.contains_subgraph(g, name)
            if emb is not None:
                hits += 1
                assert FB.check_embedding(g, name, emb)
    assert hits > 50  # the sample must actually exercise positives


def test_agreement_with_brute_force(rng):
    patterns = [F.cycle(4), F.theta(1, 2, 2), F.complete(4), F.path(5), F.star(4)]
    for _ in range(80):
        g = random_connected(rng, 4, 7)
        for p in patterns:
            assert (FB.contains_subgraph(g, p) is not None) == brute_contains(g, p)


def test_monotone_under_edge_addition(rng):
    for _ in range(80):
        g = random_connected(rng, 5, 9)
        non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                     if not g.has_edge(u, v)]
        if not non_edges:
            continue
        u, v = non_edges[rng.randrange(len(non_edges))]
        bigger = g.add_edge(u, v)
        for name in FB.NAMED_PATTERNS:
            if FB.contains_subgraph(g, name) is not None:
                assert FB.contains_subgraph(bigger, name) is not None


@pytest.mark.parametrize("r", [2, 3, 4])
def test_theta_forces_cycle(r, rng):
    """Containing the (1,2,r) theta forces the (r+1)-cycle."""
    theta = F.theta(1, 2, r)
    cyc = F.cycle(r + 1)
    found = 0
    for _ in range(400):
        g = random_connected(rng, 5, 9)
        if FB.contains_subgraph(g, theta) is not None:
            found += 1
            assert FB.contains_subgraph(g, cyc) is not None
    assert found > 40


def test_pattern_validation():
    with pytest.raises(ValueError):
        FB.as_pattern(F.empty(3))
    with pytest.raises(ValueError):
        FB.as_pattern(F.disjoint_union(F.complete(2), F.complete(2)))
    with pytest.raises(ValueError):
        FB.named_pattern("c7")


def test_deterministic_witness():
    g = F.join(F.complete(2), F.empty(4))
    first = FB.contains_subgraph(g, "theta122")
    for _ in range(5):
        assert FB.contains_subgraph(g, "theta122") == first
