"""Strong colorings: split the vertices into parts so every edge is rainbow.

An r-graph is r-partite exactly when its co-occurrence graph (vertices
joined when they share an edge) is properly r-colorable, because an edge is
rainbow iff all its internal pairs receive distinct colors.  The search is a
backtracking coloring with saturation-degree ordering, clique-based early
failure, and label-symmetry breaking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Hypergraph
from .patterns import has_clique


@dataclass(frozen=True)
class PartitionCertificate:
    """Vertex -> part assignment; ``parts[v]`` is in ``0..num_parts-1``."""

    parts: tuple[int, ...]
    num_parts: int


def co_occurrence(h: Hypergraph) -> list[int]:
    """Adjacency bit masks of the graph joining vertices sharing an edge."""
    adjacency = [0] * h.n
    for em in h.edge_masks:
        rest = em
        while rest:
            low = rest & -rest
            rest ^= low
            adjacency[low.bit_length() - 1] |= em & ~low
    return adjacency


def find_r_partition(h: Hypergraph, num_parts: int | None = None) -> PartitionCertificate | None:
    """A strong coloring with ``num_parts`` parts (default: r), or None.

    Isolated vertices are assigned part 0.  Part indices are arbitrary
    labels; compare certificates through :func:`verify_partition`, not by
    equality.
    """
    k = h.r if num_parts is None else num_parts
    if k < 1:
        raise ValueError(f"need at least one part, got {k}")
    adjacency = co_occurrence(h)
    # any (k+1)-clique of co-occurring vertices kills all k-colorings
    if has_clique(adjacency, k + 1):
        return None
    n = h.n
    color = [-1] * n
    colmask = [0] * k
    uncolored = set(range(n))

    def pick() -> int:
        best_v = -1
        best_key = None
        for v in uncolored:
            sat = sum(1 for c in range(k) if colmask[c] & adjacency[v])
            key = (-sat, -adjacency[v].bit_count(), v)
            if best_key is None or key < best_key:
                best_key = key
                best_v = v
        return best_v

    def solve(used: int) -> bool:
        if not uncolored:
            return True
        v = pick()
        uncolored.remove(v)
        bit = 1 << v
        # a color index may be new only when all smaller ones already appear
        for c in range(min(k - 1, used) + 1):
            if colmask[c] & adjacency[v]:
                continue
            color[v] = c
            colmask[c] |= bit
            if solve(max(used, c + 1)):
                return True
            color[v] = -1
            colmask[c] ^= bit
        uncolored.add(v)
        return False

    if solve(0):
        return PartitionCertificate(tuple(color), k)
    return None


def verify_partition(h: Hypergraph, cert: PartitionCertificate) -> bool:
    """True iff the certificate assigns all vertices to valid parts and
    every edge takes r pairwise distinct parts."""
    if len(cert.parts) != h.n:
        raise ValueError(
            f"certificate assigns {len(cert.parts)} vertices, hypergraph has {h.n}"
        )
    if any(not 0 <= p < cert.num_parts for p in cert.parts):
        raise ValueError("part index out of range")
    for e in h.edges:
        if len({cert.parts[v] for v in e}) != h.r:
            return False
    return True
