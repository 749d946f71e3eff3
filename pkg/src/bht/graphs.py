"""Immutable simple graphs over bitset adjacency rows.

Vertices are 0..n-1 and every neighbourhood is a Python int used as a
bitset, so the same representation covers both small graphs (single
machine word) and the occasional larger one.  All editing operations
return new Graph values; nothing here mutates.

The canonical form is a refinement-based labelling (iterated colour
refinement, individualise the first smallest non-singleton cell,
branch only over twin classes) that returns the lexicographically
minimal adjacency encoding.  Two graphs are isomorphic iff their
canonical forms compare equal; tests check this against an all-
permutations oracle for small n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[u]`` is the neighbour bitset of u."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {u}: neighbour out of range")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric edge ({u},{v})")

    # -- accessors ---------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.adj[u]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise ValueError(f"vertex {u} out of range 0..{self.n - 1}")

    # -- editing by copy ---------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"loop edge ({u},{v}) rejected")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def remove_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        keep = [u for u in range(self.n) if u != v]
        return induced_subgraph(self, keep)

    def add_vertex(self) -> "Graph":
        """Append one isolated vertex."""
        return Graph(self.n + 1, self.adj + (0,))

    def relabel(self, perm: list[int]) -> "Graph":
        """Apply ``perm`` (new index -> old vertex) and return the copy."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the vertices")
        pos = [0] * self.n
        for new, old in enumerate(perm):
            pos[old] = new
        rows = [0] * self.n
        for new, old in enumerate(perm):
            row = 0
            for w in bits(self.adj[old]):
                row |= 1 << pos[w]
            rows[new] = row
        return Graph(self.n, tuple(rows))


# -- construction ------------------------------------------------------------


def from_edge_list(pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build the minimal graph covering all endpoints; duplicates coalesce."""
    pairs = list(pairs)
    for u, v in pairs:
        if u == v:
            raise ValueError(f"loop edge ({u},{v}) rejected")
        if u < 0 or v < 0:
            raise ValueError(f"negative vertex in ({u},{v})")
    n = 1 + max((max(u, v) for u, v in pairs), default=-1)
    rows = [0] * n
    for u, v in pairs:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled 0.. in ascending order."""
    vs = sorted(set(vertices))
    for v in vs:
        g._check_vertex(v)
    pos = {v: i for i, v in enumerate(vs)}
    rows = [0] * len(vs)
    for v in vs:
        for w in bits(g.adj[v]):
            if w in pos:
                rows[pos[v]] |= 1 << pos[w]
    return Graph(len(vs), tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """All edges of both graphs plus every cross edge."""
    u = disjoint_union(g, h)
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = list(u.adj)
    for v in range(g.n):
        rows[v] |= hmask
    for v in range(g.n, u.n):
        rows[v] |= gmask
    return Graph(u.n, tuple(rows))


def strip_isolated(g: Graph) -> Graph:
    """Drop all degree-zero vertices (never done implicitly elsewhere)."""
    return induced_subgraph(g, [v for v in range(g.n) if g.adj[v]])


# -- connectivity ------------------------------------------------------------


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitsets, ordered by least vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = [s]
        while frontier:
            v = frontier.pop()
            for w in bits(g.adj[v] & ~comp):
                comp |= 1 << w
                frontier.append(w)
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(components(g)) == 1


# -- canonical form ----------------------------------------------------------


def _refine(adj: tuple[int, ...], colors: list[int]) -> list[int]:
    n = len(adj)
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[w] for w in bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        dense = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [dense[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _twin_classes(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    """One representative per twin class inside ``cell``.

    u, v are twins when their neighbourhoods agree away from {u, v};
    swapping them is then an automorphism, so only one branch is needed.
    """
    reps: list[int] = []
    classes: list[list[int]] = []
    for u in cell:
        placed = False
        for rep_idx, cls in enumerate(classes):
            v = cls[0]
            mask = ~((1 << u) | (1 << v))
            if adj[u] & mask == adj[v] & mask:
                cls.append(u)
                placed = True
                break
        if not placed:
            classes.append([u])
            reps.append(u)
    return reps


def _adjacency_code(g: Graph, perm: list[int]) -> bytes:
    bitstring = 0
    k = 0
    for i in range(g.n):
        ai = g.adj[perm[i]]
        for j in range(i + 1, g.n):
            bitstring = (bitstring << 1) | (ai >> perm[j] & 1)
            k += 1
    nbytes = (k + 7) // 8
    bitstring <<= nbytes * 8 - k
    return g.n.to_bytes(2, "big") + bitstring.to_bytes(nbytes, "big")


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string; equal iff graphs are isomorphic."""
    n = g.n
    if n == 0:
        return (0).to_bytes(2, "big")
    adj = g.adj
    best: list[bytes | None] = [None]

    def descend(colors: list[int]) -> None:
        colors = _refine(adj, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                if target is None or len(cells[c]) < len(cells[target]):
                    target = c
        if target is None:
            perm = sorted(range(n), key=lambda v: colors[v])
            code = _adjacency_code(g, perm)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        for v in _twin_classes(adj, cells[target]):
            branched = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
            dense = {s: i for i, s in enumerate(sorted(set(branched)))}
            descend([dense[s] for s in branched])

    descend([0] * n)
    assert best[0] is not None
    return best[0]


# -- file formats -------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """One ``u v`` pair per line, 0-indexed; ``#`` starts a comment."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return from_edge_list(pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"# {g.n} vertices, {g.m} edges"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def to_graph6(g: Graph) -> str:
    """graph6 encoding: 6-bit chunks of the upper triangle, offset 63."""
    n = g.n
    if n > 258047:
        raise ValueError("graph6 supports at most 258047 vertices here")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    bitstring = 0
    k = 0
    for col in range(1, n):
        for row in range(col):
            bitstring = (bitstring << 1) | (g.adj[row] >> col & 1)
            k += 1
    pad = (-k) % 6
    bitstring <<= pad
    k += pad
    body = "".join(chr((bitstring >> s & 63) + 63) for s in range(k - 6, -6, -6))
    return head + body


def from_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise ValueError("empty graph6 string")
    vals = [ord(c) - 63 for c in text]
    if any(v < 0 or v > 63 for v in vals):
        raise ValueError("invalid graph6 character")
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    else:
        if len(vals) < 4 or vals[1] == 63:
            raise ValueError("unsupported graph6 size prefix")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    need = n * (n - 1) // 2
    if len(body) * 6 < need:
        raise ValueError("graph6 body too short")
    bitstring = 0
    for v in body:
        bitstring = (bitstring << 6) | v
    bitstring >>= len(body) * 6 - need
    rows = [0] * n
    k = need
    for col in range(1, n):
        for row in range(col):
            k -= 1
            if bitstring >> k & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
    return Graph(n, tuple(rows))
