"""Constructors for the named graph families.

Every constructor validates its parameter constraints (including parity,
which is a hard error rather than silent rounding) and produces a fixed
vertex layout so that the equitable partitions used elsewhere can be
written down by index:

* ``complete_split(n, k)``: clique on 0..k-1, independent set after.
* ``split_pendant(n, k, t)``: complete split part first, then the t
  pendant vertices, all hanging off vertex 0 (the lowest-indexed
  dominating vertex).
* ``star_matching(n, k)``: centre 0, leaves 1..n-1, matching edges
  (1,2), (3,4), ...
* ``theta(p, q, r)``: the two hubs are 0 and 1, path interiors follow.
* ``double_star(a, b)``: adjacent centres 0 and 1, the a leaves of 0
  before the b leaves of 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import Graph, bits, components, disjoint_union, from_edge_list, join


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic name plus integer parameters identifying one family member."""

    name: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.name}({','.join(map(str, self.params))})"


def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("part sizes must be nonnegative")
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph(a + b, tuple(right for _ in range(a)) + tuple(left for _ in range(b)))


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    if n < 1:
        raise ValueError("a star needs at least one vertex")
    return complete_bipartite(1, n - 1)


def path(n: int) -> Graph:
    return from_edge_list([(i, i + 1) for i in range(n - 1)]) if n > 1 else empty(n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return from_edge_list([(i, (i + 1) % n) for i in range(n)])


def complete_split(n: int, k: int) -> Graph:
    """K_k joined to n-k independent vertices; k*(k-1)/2 + k(n-k) edges."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return join(complete(k), empty(n - k))


def book(m: int) -> Graph:
    """The odd-size complete split graph with 2 dominating vertices."""
    if m < 3 or m % 2 == 0:
        raise ValueError(f"book graph needs odd m >= 3, got {m}")
    return complete_split((m + 3) // 2, 2)


def split_pendant(n: int, k: int, t: int) -> Graph:
    """Complete split graph plus t pendants on its first dominating vertex."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    if n - t < 1:
        raise ValueError(f"no vertex left to attach pendants: n={n}, t={t}")
    base = complete_split(n - t, k)
    if t and k == 0 and n - t > 1:
        raise ValueError("pendants need a dominating vertex, so k >= 1")
    g = base
    for _ in range(t):
        g = g.add_vertex().add_edge(0, g.n)
    return g


def split_pendant_for_size(m: int, t: int) -> Graph:
    """The k=2 split-pendant graph with exactly m edges and t pendants."""
    if (m + t) % 2 == 0:
        raise ValueError(f"m={m} and t={t} must have opposite parity")
    if m < t + 1:
        raise ValueError(f"need m >= t+1, got m={m}, t={t}")
    return split_pendant((m + t + 3) // 2, 2, t)


def star_matching(n: int, k: int) -> Graph:
    """Star K_{1,n-1} plus k disjoint edges inside the leaf set; m = n-1+k."""
    if k < 0 or 2 * k > n - 1:
        raise ValueError(f"need 0 <= 2k <= n-1, got n={n}, k={k}")
    g = star(n)
    for i in range(k):
        g = g.add_edge(2 * i + 1, 2 * i + 2)
    return g


def generalized_theta(lengths: list[int]) -> Graph:
    """Two hub vertices joined by internally disjoint paths of the given lengths."""
    ls = list(lengths)
    if len(ls) < 2:
        raise ValueError("need at least two paths")
    if ls != sorted(ls):
        raise ValueError("path lengths must be nondecreasing")
    if any(l < 1 for l in ls) or ls.count(1) > 1 or (len(ls) > 1 and ls[1] < 2):
        raise ValueError(f"invalid path lengths {ls}: at most one length-1 path")
    edges = []
    nxt = 2
    for l in ls:
        prev = 0
        for _ in range(l - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return from_edge_list(edges)


def theta(p: int, q: int, r: int) -> Graph:
    if not (p <= q <= r and q >= 2 and p >= 1):
        raise ValueError(f"need 1 <= p <= q <= r and q >= 2, got ({p},{q},{r})")
    return generalized_theta([p, q, r])


def r_chain(k: int) -> Graph:
    """k copies of K_4 sharing the single common vertex 0; 6k edges."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    edges = []
    for i in range(k):
        block = [0, 3 * i + 1, 3 * i + 2, 3 * i + 3]
        edges += [(a, b) for ai, a in enumerate(block) for b in block[ai + 1:]]
    return from_edge_list(edges) if k else empty(1)


def _max_degree_vertex(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("graph is empty")
    degs = [g.degree(v) for v in range(g.n)]
    return degs.index(max(degs))


def hts_circ(h: Graph, t_side: list[int], g: Graph) -> Graph:
    """Join the first max-degree vertex of g to the side ``t_side`` of bipartite h.

    ``t_side`` must be one side of a bipartition of h (so no edges inside
    it and none inside its complement).  Layout: g's vertices first.
    """
    tset = set(t_side)
    if not tset <= set(range(h.n)):
        raise ValueError("t_side out of range")
    sset = set(range(h.n)) - tset
    for u, v in h.edges():
        if (u in tset) == (v in tset):
            raise ValueError(f"h is not bipartite with the given sides: edge ({u},{v})")
    if g.n == 0:
        raise ValueError("g must be nonempty")
    out = disjoint_union(g, h)
    hub = _max_degree_vertex(g)
    for v in sorted(tset):
        out = out.add_edge(hub, g.n + v)
    return out


def diamond_join(h: Graph, g: Graph) -> Graph:
    """Join the first max-degree vertex of g to every vertex of h."""
    if g.n == 0:
        raise ValueError("g must be nonempty")
    out = disjoint_union(g, h)
    hub = _max_degree_vertex(g)
    for v in range(h.n):
        out = out.add_edge(hub, g.n + v)
    return out


def double_star(a: int, b: int) -> Graph:
    """Adjacent centres with a and b leaves respectively; a+b+1 edges."""
    if a < 0 or b < 0:
        raise ValueError("leaf counts must be nonnegative")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return from_edge_list(edges)


def kminus(s: int, t: int) -> Graph:
    """K_{s,t} minus one edge (between the last vertex of each side); st-1 edges."""
    if not 2 <= s <= t:
        raise ValueError(f"need 2 <= s <= t, got ({s},{t})")
    return complete_bipartite(s, t).remove_edge(s - 1, s + t - 1)


def kplus(s: int, t: int) -> Graph:
    """K_{s,t} plus a new vertex pendant on vertex 0 of the s-side; st+1 edges."""
    if not 2 <= s <= t:
        raise ValueError(f"need 2 <= s <= t, got ({s},{t})")
    g = complete_bipartite(s, t).add_vertex()
    return g.add_edge(0, s + t)


def k1_join_star_edge(m: int, r: int) -> Graph:
    """K_1 joined to (star-plus-edge on r+1 vertices, plus isolated vertices).

    The apex is vertex 0; the star-plus-edge component is star_matching(r+1, 1)
    shifted by one; the m-2r-2 isolated vertices come last.  Total size m.
    """
    if r < 2:
        raise ValueError("need r >= 2")
    isolates = m - 2 * r - 2
    if isolates < 0:
        raise ValueError(f"need m >= 2r+2, got m={m}, r={r}")
    return join(empty(1), disjoint_union(star_matching(r + 1, 1), empty(isolates)))


def k1_join_candidate(m: int) -> Graph:
    """The cone candidate of the right parity: apex over S^1 (even m adds
    no isolate, odd m adds one)."""
    if m % 2 == 0:
        if m < 8:
            raise ValueError("even cone candidate needs m >= 8")
        return k1_join_star_edge(m, m // 2 - 1)
    if m < 9:
        raise ValueError("odd cone candidate needs m >= 9")
    return k1_join_star_edge(m, (m - 3) // 2)


def build(spec: FamilySpec) -> Graph:
    """Materialise a FamilySpec (the names accepted by the CLI)."""
    name, p = spec.name, spec.params
    makers = {
        "complete": lambda: complete(*p),
        "complete_bipartite": lambda: complete_bipartite(*p),
        "star": lambda: star(*p),
        "path": lambda: path(*p),
        "cycle": lambda: cycle(*p),
        "complete_split": lambda: complete_split(*p),
        "book": lambda: book(*p),
        "split_pendant": lambda: split_pendant(*p),
        "split_pendant_size": lambda: split_pendant_for_size(*p),
        "star_matching": lambda: star_matching(*p),
        "theta": lambda: theta(*p),
        "generalized_theta": lambda: generalized_theta(list(p)),
        "r_chain": lambda: r_chain(*p),
        "double_star": lambda: double_star(*p),
        "kminus": lambda: kminus(*p),
        "kplus": lambda: kplus(*p),
        "k1_join_star_edge": lambda: k1_join_star_edge(*p),
        "k1_join_candidate": lambda: k1_join_candidate(*p),
        "hts0_r_chain": lambda: hts_circ(empty(p[0]), list(range(p[0])), r_chain(p[1])),
        "star_diamond_k4": lambda: diamond_join(star((p[0] - 7) // 2 + 1), complete(4))
        if p[0] % 2 and p[0] >= 9
        else _bad_diamond(p[0]),
    }
    if name not in makers:
        raise ValueError(f"unknown family {name!r}")
    return makers[name]()


def _bad_diamond(m: int) -> Graph:
    raise ValueError(f"star_diamond_k4 needs odd m >= 9, got {m}")


FAMILY_NAMES = (
    "complete", "complete_bipartite", "star", "path", "cycle",
    "complete_split", "book", "split_pendant", "split_pendant_size",
    "star_matching", "theta", "generalized_theta", "r_chain",
    "double_star", "kminus", "kplus", "k1_join_star_edge",
    "k1_join_candidate", "hts0_r_chain", "star_diamond_k4",
)


def expected_size(spec: FamilySpec) -> int | None:
    """Closed-form edge count for specs that have one (used by tests)."""
    name, p = spec.name, spec.params
    if name == "complete_split":
        n, k = p
        return comb(k, 2) + k * (n - k)
    if name == "split_pendant":
        n, k, t = p
        return comb(k, 2) + k * (n - t - k) + t
    if name == "star_matching":
        n, k = p
        return n - 1 + k
    if name == "theta":
        return sum(p)
    if name == "r_chain":
        return 6 * p[0]
    if name == "double_star":
        return p[0] + p[1] + 1
    if name == "kminus":
        return p[0] * p[1] - 1
    if name == "kplus":
        return p[0] * p[1] + 1
    return None


def theorem_candidates(m: int) -> list[tuple[FamilySpec, Graph]]:
    """Every graph named by the main theorems at size m, with parity filtering.

    Each returned graph is asserted to have exactly m edges.
    """
    if m < 4:
        raise ValueError("need m >= 4")
    out: list[tuple[FamilySpec, Graph]] = []

    def emit(spec: FamilySpec, g: Graph) -> None:
        assert g.m == m, f"{spec} has {g.m} edges, wanted {m}"
        out.append((spec, g))

    if m % 2 == 1:
        emit(FamilySpec("book", (m,)), book(m))
        if m >= 7:
            emit(FamilySpec("split_pendant_size", (m, 2)), split_pendant_for_size(m, 2))
        if m >= 9:
            emit(FamilySpec("k1_join_candidate", (m,)), k1_join_candidate(m))
    else:
        emit(FamilySpec("split_pendant_size", (m, 1)), split_pendant_for_size(m, 1))
        if m >= 8:
            emit(FamilySpec("k1_join_candidate", (m,)), k1_join_candidate(m))
    if m >= 4:
        emit(FamilySpec("star_matching", (m, 1)), star_matching(m, 1))
    return out


def is_complete_bipartite(g: Graph) -> bool:
    """True iff g is K_{a,b} for some a, b >= 1 (used for exclusion sets)."""
    if g.n < 2 or not g.m:
        return False
    if len(components(g)) != 1:
        return False
    side = {0: 0}
    queue = [0]
    while queue:
        v = queue.pop()
        for w in bits(g.adj[v]):
            if w not in side:
                side[w] = side[v] ^ 1
                queue.append(w)
            elif side[w] == side[v]:
                return False
    a = sum(1 for v in side.values() if v == 0)
    return g.m == a * (g.n - a)
