"""Enumeration correctness (independent oracles), search and verification."""

import json
import math
from fractions import Fraction
from itertools import combinations

import pytest

from bht import families as F
from bht import search as SR
from bht.graphs import (
    Graph,
    canonical_form,
    from_edge_list,
    is_connected,
)
from bht.polynomials import book_lambda
from bht.spectral import extremal_vertex

# Totals per edge count, frozen from the oracle runs below (the Burnside
# cross-check recomputes the layer counts live on every test run).
FROZEN_CLASS_COUNTS = {1: 1, 2: 1, 3: 3, 4: 5, 5: 12, 6: 30, 7: 79, 8: 227, 9: 710, 10: 2322}


def test_frozen_totals():
    for m, expected in FROZEN_CLASS_COUNTS.items():
        if m <= 8:
            assert len(list(SR.enumerate_connected(m))) == expected


def test_frozen_totals_nine_ten():
    assert len(list(SR.enumerate_connected(9))) == FROZEN_CLASS_COUNTS[9]
    assert len(list(SR.enumerate_connected(10))) == FROZEN_CLASS_COUNTS[10]


def test_no_duplicates_and_determinism():
    for m in range(1, 8):
        first = [canonical_form(g) for g in SR.enumerate_connected(m)]
        second = [canonical_form(g) for g in SR.enumerate_connected(m)]
        assert first == second
        assert len(set(first)) == len(first)
        for g in SR.enumerate_connected(m):
            assert is_connected(g) and g.m == m and min(g.adj) > 0


def test_layer_counts_against_labeled_oracle():
    """Spec oracle: dedup all labeled graphs, filter connectivity and size."""
    for n in range(2, 7):
        pair_list = list(combinations(range(n), 2))
        per_m: dict[int, set[bytes]] = {}
        for mask in range(2 ** len(pair_list)):
            edges = [e for i, e in enumerate(pair_list) if mask >> i & 1]
            if not edges:
                continue
            g = from_edge_list(edges)
            if g.n < n:
                g = Graph(n, g.adj + (0,) * (n - g.n))
            if not is_connected(g):
                continue
            per_m.setdefault(g.m, set()).add(canonical_form(g))
        for m, classes in per_m.items():
            assert len(SR.connected_layer(n, m)) == len(classes), (n, m)


def test_tree_layers_against_pruefer_oracle():
    """Every labeled tree decodes from a unique Pruefer sequence.

    Capped at n = 7 for runtime; the Burnside joint check covers the
    larger tree layers.
    """
    for n in (6, 7):
        seen = set()
        for code in range(n ** (n - 2)):
            seq = []
            c = code
            for _ in range(n - 2):
                seq.append(c % n)
                c //= n
            degree = [1] * n
            for v in seq:
                degree[v] += 1
            edges = []
            avail = sorted(range(n))
            seq_iter = list(seq)
            for v in seq_iter:
                leaf = next(u for u in avail if degree[u] == 1)
                edges.append((leaf, v))
                degree[leaf] -= 1
                degree[v] -= 1
                avail.remove(leaf)
            last = [u for u in avail if degree[u] == 1]
            edges.append((last[0], last[1]))
            seen.add(canonical_form(from_edge_list(edges)))
        assert len(SR.trees(n)) == len(seen)


def _burnside_all_graph_classes(n: int, m: int) -> int:
    """Isomorphism classes of ALL n-vertex graphs with m edges, by orbit
    counting over cycle types (no canonical forms involved)."""

    def partitions(k: int, cap: int | None = None):
        cap = cap or k
        if k == 0:
            yield []
            return
        for first in range(min(k, cap), 0, -1):
            for rest in partitions(k - first, first):
                yield [first] + rest

    total = Fraction(0)
    nfact = math.factorial(n)
    for ptn in partitions(n):
        counts: dict[int, int] = {}
        for part in ptn:
            counts[part] = counts.get(part, 0) + 1
        perms = nfact
        for length, cnt in counts.items():
            perms //= length**cnt * math.factorial(cnt)
        orbit_sizes: list[int] = []
        for i, a in enumerate(ptn):
            orbit_sizes += [a] * ((a - 1) // 2)
            if a % 2 == 0:
                orbit_sizes.append(a // 2)
            for b in ptn[i + 1:]:
                g = math.gcd(a, b)
                orbit_sizes += [a * b // g] * g
        ways = [0] * (m + 1)
        ways[0] = 1
        for size in orbit_sizes:
            if size <= m:
                for tot in range(m, size - 1, -1):
                    ways[tot] += ways[tot - size]
        total += Fraction(perms * ways[m], nfact)
    assert total.denominator == 1
    return int(total)


def test_layer_counts_against_burnside():
    """Joint validation: multisets of enumerated connected classes (plus
    isolated vertices) must reproduce the Burnside count of all classes."""
    n_top, m_top = 10, 10
    layer_count = {
        (n, m): len(SR.connected_layer(n, m))
        for n in range(2, n_top + 1)
        for m in range(n - 1, min(m_top, n * (n - 1) // 2) + 1)
    }
    for n in range(2, n_top + 1):
        for m in range(1, min(m_top, n * (n - 1) // 2) + 1):
            dp = {(0, 0): 1}
            for (nc, mc), cnt in sorted(layer_count.items()):
                if not cnt:
                    continue
                new = dict(dp)
                for (v, e), ways in dp.items():
                    k = 1
                    while v + k * nc <= n and e + k * mc <= m:
                        choose = math.comb(cnt + k - 1, k)
                        key = (v + k * nc, e + k * mc)
                        new[key] = new.get(key, 0) + ways * choose
                        k += 1
                dp = new
            ours = sum(ways for (v, e), ways in dp.items() if e == m and v <= n)
            assert ours == _burnside_all_graph_classes(n, m), (n, m)


def test_enumerate_n_max():
    assert all(g.n <= 4 for g in SR.enumerate_connected(5, n_max=4))
    assert len(list(SR.enumerate_connected(5, n_max=4))) < FROZEN_CLASS_COUNTS[5]


def test_isolate_free_enumeration():
    classes = list(SR.enumerate_isolate_free(3))
    assert len(classes) == 5
    forms = {canonical_form(g) for g in classes}
    assert len(forms) == 5
    with pytest.raises(ValueError):
        list(SR.enumerate_isolate_free(11))


def test_widened_search_matches_connected_best():
    rep_conn = SR.extremal_search(5, ["c5"])
    rep_wide = SR.extremal_search(5, ["c5"], connected_only=False)
    assert abs(rep_conn.best_lambda - rep_wide.best_lambda) <= 1e-12


def test_pruning_soundness():
    for m in (7, 8, 9):
        for patterns in (["theta123"], ["c5"]):
            pruned = SR.extremal_search(m, patterns)
            unpruned = SR.extremal_search(m, patterns, prune=False)
            assert pruned.best_lambda == unpruned.best_lambda
            assert [c for _, c in pruned.maximizers] == [c for _, c in unpruned.maximizers]
            assert pruned.counts["pruned"] > 0


def test_search_determinism_and_jobs():
    a = SR.extremal_search(8, ["theta123"])
    b = SR.extremal_search(8, ["theta123"])
    assert a.to_json()["maximizers"] == b.to_json()["maximizers"]
    assert a.best_lambda == b.best_lambda
    c = SR.extremal_search(8, ["theta123"], jobs=2)
    assert a.to_json()["maximizers"] == c.to_json()["maximizers"]
    assert a.best_lambda == c.best_lambda


def test_search_cap_guard():
    with pytest.raises(ValueError, match="cap"):
        SR.extremal_search(13, ["c5"])


def test_book_is_unique_maximizer_at_nine():
    rep = SR.extremal_search(9, ["theta123"])
    assert abs(rep.best_lambda - book_lambda(9)) <= 1e-9
    assert [c for _, c in rep.maximizers] == [canonical_form(F.book(9))]


def test_sqrt_m_equality_family_at_nine():
    excl = [
        canonical_form(F.complete_bipartite(a, 9 // a))
        for a in (1, 3)
    ]
    rep = SR.extremal_search(9, ["theta122", "theta123"], excl)
    assert abs(rep.best_lambda - 3.0) <= 1e-9
    expected = {
        canonical_form(F.star_matching(7, 3)),
        canonical_form(F.star_matching(8, 2)),
        canonical_form(F.star_matching(9, 1)),
    }
    assert {c for _, c in rep.maximizers} == expected


def _articulation_points(g: Graph) -> set[int]:
    return {
        v for v in range(g.n)
        if g.n > 2 and not is_connected(g.remove_vertex(v))
    }


def test_maximizers_cut_vertex_consistency():
    """With a 2-connected forbidden pattern, no maximizer has a cut vertex
    away from the extremal vertex's closed neighbourhood."""
    for m, patterns in [(8, ["theta123"]), (9, ["theta123"]), (9, ["c5"])]:
        rep = SR.extremal_search(m, patterns)
        for g, _ in rep.maximizers:
            assert is_connected(g)
            u = extremal_vertex(g)
            closed = {u, *g.neighbors(u)}
            assert _articulation_points(g) <= closed


def test_checkpoint_resume(tmp_path):
    first = SR.extremal_search(7, ["c5"], cache_dir=tmp_path)
    files = list(tmp_path.glob("search_m7_*.json"))
    assert len(files) == 1
    second = SR.extremal_search(7, ["c5"], cache_dir=tmp_path)
    assert first.to_json()["maximizers"] == second.to_json()["maximizers"]
    assert first.counts == second.counts
    # drop one layer from the checkpoint; the run must recompute only it
    data = json.loads(files[0].read_text())
    data.pop(sorted(data)[0])
    files[0].write_text(json.dumps(data))
    third = SR.extremal_search(7, ["c5"], cache_dir=tmp_path)
    assert first.to_json()["maximizers"] == third.to_json()["maximizers"]


def test_verify_theorem_oracle_modes():
    rep = SR.verify_theorem("theta123", 9)
    assert rep.status == "pass"
    names = {n for n, ok, _ in rep.checks}
    assert "oracle_unique_maximizer" in names
    rep = SR.verify_theorem("theta123", 8)
    assert rep.status == "pass"
    assert any(n == "oracle_strict" for n, _, _ in rep.checks)
    rep = SR.verify_theorem("theta123", 7)
    assert rep.status == "not_claimed"


def test_verify_theorem_construction_modes():
    for thm, m in [
        ("c5_runner_up", 23), ("c5_runner_up", 24),
        ("c6_runner_up", 72), ("c6_runner_up", 74),
        ("c6_runner_up", 71), ("c6_runner_up", 73),
        ("theta124", 22), ("theta124", 23),
        ("theta_pair_runner_up", 26), ("theta_pair_runner_up", 27),
    ]:
        rep = SR.verify_theorem(thm, m)
        assert rep.status == "pass", (thm, m, rep.checks)
    assert SR.verify_theorem("theta_pair_runner_up", 20).status == "not_claimed"
    with pytest.raises(ValueError):
        SR.verify_theorem("bogus", 9)
