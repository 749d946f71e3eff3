"""Equitable partitions, exact quotient matrices and their polynomials.

A quotient matrix of an equitable partition shares its largest eigenvalue
with the adjacency matrix, which is what makes the closed-form
polynomials of the extremal families exactly reproducible.  All quotient
entries and characteristic polynomials here are exact rationals; the
float world only enters in `quotient_lambda_check`, which confronts the
exact largest root with the dense eigenvalue solver.

The ``*_partition`` helpers at the bottom return (graph, blocks) pairs
for the specific layouts produced by `bht.families`, block-ordered so the
quotient matrices come out in their reference shape.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import families
from .graphs import Graph
from .polynomials import Polynomial, largest_real_root

Blocks = tuple[tuple[int, ...], ...]


def validate_partition(g: Graph, blocks: Sequence[Sequence[int]]) -> Blocks:
    """Check disjointness, coverage and nonemptiness; return frozen blocks."""
    seen: set[int] = set()
    out = []
    for i, blk in enumerate(blocks):
        vs = tuple(blk)
        if not vs:
            raise ValueError(f"block {i} is empty")
        for v in vs:
            if not 0 <= v < g.n:
                raise ValueError(f"block {i}: vertex {v} out of range")
            if v in seen:
                raise ValueError(f"vertex {v} appears twice")
            seen.add(v)
        out.append(vs)
    if len(seen) != g.n:
        raise ValueError("blocks do not cover all vertices")
    return tuple(out)


def is_equitable(g: Graph, blocks: Sequence[Sequence[int]]) -> bool:
    """True iff within each block, neighbour counts into every block agree."""
    bl = validate_partition(g, blocks)
    masks = [_mask(vs) for vs in bl]
    for vs in bl:
        for mask in masks:
            counts = {(g.adj[v] & mask).bit_count() for v in vs}
            if len(counts) > 1:
                return False
    return True


def _mask(vs: Sequence[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def quotient(g: Graph, blocks: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact quotient matrix; requires an equitable partition."""
    bl = validate_partition(g, blocks)
    if not is_equitable(g, bl):
        raise ValueError("partition is not equitable")
    masks = [_mask(vs) for vs in bl]
    return [[Fraction((g.adj[vs[0]] & mask).bit_count()) for mask in masks] for vs in bl]


def charpoly(matrix: Sequence[Sequence[Fraction]]) -> Polynomial:
    """det(xI - M) with exact rational coefficients (Faddeev-LeVerrier)."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix must be square")
    m = [[Fraction(x) for x in row] for row in matrix]
    coeffs = [Fraction(1)]  # leading
    aux = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # aux <- m @ (aux + c_{k-1} I)
        shifted = [row[:] for row in aux]
        for i in range(n):
            shifted[i][i] += coeffs[-1]
        aux = [[sum(m[i][l] * shifted[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        trace = sum(aux[i][i] for i in range(n))
        coeffs.append(-trace / k)
    return Polynomial(list(reversed(coeffs)))


def adjacency_charpoly(g: Graph) -> Polynomial:
    """Exact characteristic polynomial of the full adjacency matrix."""
    mat = [[Fraction(1) if g.adj[u] >> v & 1 else Fraction(0) for v in range(g.n)] for u in range(g.n)]
    return charpoly(mat)


def coarsest_equitable_refinement(g: Graph, seed: Sequence[Sequence[int]]) -> Blocks:
    """Refine the seed partition by neighbour counts until equitable.

    Deterministic: blocks keep their seed order and split by ascending
    count signature; idempotent on already-equitable partitions.
    """
    blocks = [tuple(sorted(vs)) for vs in validate_partition(g, seed)]
    while True:
        masks = [_mask(vs) for vs in blocks]
        new_blocks: list[tuple[int, ...]] = []
        changed = False
        for vs in blocks:
            sig: dict[tuple[int, ...], list[int]] = {}
            for v in vs:
                key = tuple((g.adj[v] & mask).bit_count() for mask in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) > 1:
                changed = True
            for key in sorted(sig):
                new_blocks.append(tuple(sig[key]))
        blocks = new_blocks
        if not changed:
            return tuple(blocks)


def quotient_lambda_check(g: Graph, blocks: Sequence[Sequence[int]]) -> tuple[float, float, bool]:
    """Largest adjacency eigenvalue vs largest quotient root, 1e-9 agreement."""
    from .spectral import spectral_radius

    lam_a = spectral_radius(g).lam
    lam_q, _ = largest_real_root(charpoly(quotient(g, blocks)))
    return lam_a, lam_q, abs(lam_a - lam_q) <= 1e-9


# ---------------------------------------------------------------------------
# reference partitions for the family layouts
# ---------------------------------------------------------------------------


def split_pendant_partition(m: int, t: int) -> tuple[Graph, Blocks]:
    """4 blocks: pendant-carrying hub, other hub, independents, pendants."""
    g = families.split_pendant_for_size(m, t)
    n_base = g.n - t
    blocks = (
        (0,),
        (1,),
        tuple(range(2, n_base)),
        tuple(range(n_base, g.n)),
    )
    return g, blocks


def diamond_k4_partition(m: int) -> tuple[Graph, Blocks]:
    """Star joined onto K4: blocks (K4 rim, hub, star leaves, star centre)."""
    if m % 2 == 0 or m < 9:
        raise ValueError(f"need odd m >= 9, got {m}")
    leaves = (m - 7) // 2
    g = families.diamond_join(families.star(leaves + 1), families.complete(4))
    blocks = ((1, 2, 3), (0,), tuple(range(5, 5 + leaves)), (4,))
    return g, blocks


def cone_star_edge_partition(m: int, r: int) -> tuple[Graph, Blocks]:
    """5 blocks: isolates, apex, matched pair, inner centre, plain leaves."""
    isolates = m - 2 * r - 2
    if r < 3 or isolates < 1:
        raise ValueError(f"need r >= 3 and m >= 2r+3, got m={m}, r={r}")
    g = families.k1_join_star_edge(m, r)
    blocks = (
        tuple(range(r + 2, r + 2 + isolates)),
        (0,),
        (2, 3),
        (1,),
        tuple(range(4, r + 2)),
    )
    return g, blocks


def cone_double_star_partition(m: int) -> tuple[Graph, Blocks]:
    """Apex over a double star: 5 singleton-ish blocks per reference layout."""
    if m % 2 == 0 or m < 9:
        raise ValueError(f"need odd m >= 9, got {m}")
    a = (m - 5) // 2
    g = families.join(families.empty(1), families.double_star(a, 1))
    # vertices: 0 apex, 1 centre u, 2 centre u', 3..a+2 leaves of u, a+3 leaf of u'
    blocks = ((0,), (1,), (2,), (a + 3,), tuple(range(3, a + 3)))
    return g, blocks


def cone_double_star_alt_partition(m: int) -> tuple[Graph, Blocks]:
    """The rewired comparison graph: deep leaf detached, pendant on the apex."""
    if m % 2 == 0 or m < 9:
        raise ValueError(f"need odd m >= 9, got {m}")
    a = (m - 5) // 2
    g, _ = cone_double_star_partition(m)
    g = g.remove_edge(2, a + 3).add_vertex().add_edge(0, g.n)
    blocks = ((0,), (1,), (a + 3,), (g.n - 1,), tuple(range(3, a + 3)) + (2,))
    return g, blocks


def star_matching_partition(m: int, merged: bool = True) -> tuple[Graph, Blocks]:
    """Star plus one matching edge; 3 blocks merged, 4 blocks otherwise."""
    if m < 4:
        raise ValueError("need m >= 4")
    g = families.star_matching(m, 1)
    if merged:
        blocks: Blocks = ((0,), (1, 2), tuple(range(3, m)))
    else:
        blocks = ((0,), (1,), (2,), tuple(range(3, m)))
    return g, blocks


def bipartite_minus_partition(m: int, p: int) -> tuple[Graph, Blocks]:
    """Complete bipartite minus an edge, 4 blocks isolating the missing pair."""
    if (m + 1) % p or p < 2 or p * p > m + 1:
        raise ValueError(f"need p >= 2 dividing m+1, p <= sqrt(m+1); got m={m}, p={p}")
    q = (m + 1) // p
    g = families.kminus(p, q)
    blocks = (tuple(range(p - 1)), (p - 1,), tuple(range(p, p + q - 1)), (p + q - 1,))
    return g, blocks


def bipartite_plus_partition(m: int, p: int) -> tuple[Graph, Blocks]:
    """Complete bipartite plus a pendant, 4 blocks isolating the new edge."""
    if (m - 1) % p or p < 2 or p * p > m - 1:
        raise ValueError(f"need p >= 2 dividing m-1, p <= sqrt(m-1); got m={m}, p={p}")
    q = (m - 1) // p
    g = families.kplus(p, q)
    blocks = (tuple(range(1, p)), (0,), tuple(range(p, p + q)), (p + q,))
    return g, blocks


REFERENCE_PARTITIONS = {
    "split_pendant": split_pendant_partition,
    "diamond_k4": diamond_k4_partition,
    "cone_star_edge": cone_star_edge_partition,
    "cone_double_star": cone_double_star_partition,
    "cone_double_star_alt": cone_double_star_alt_partition,
    "star_matching": star_matching_partition,
    "bipartite_minus": bipartite_minus_partition,
    "bipartite_plus": bipartite_plus_partition,
}
