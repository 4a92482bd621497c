"""Canonical forms for small hypergraphs: a total-order key per
isomorphism class.

The key is the minimum, over all vertex relabelings, of the sorted tuple of
edge bit masks, so equal keys mean isomorphic and vice versa.  The minimum
is found by branch-and-bound: vertices are placed one at a time onto new
labels 0, 1, ...; every edge whose vertices are all placed contributes a
decided mask, and since those masks are smaller than any mask touching an
unplaced label, the decided part is a prefix of the final code and prunes
against the best code found so far.  Vertices interchangeable by a
transposition automorphism are tried only once per node, which collapses
clone classes and keeps highly symmetric inputs (complete graphs, blowups)
linear instead of factorial.

Intended for n <= 12; guaranteed correct there, fastest below 10.
"""

from __future__ import annotations

from .core import Hypergraph, vertices_of
from .errors import CapacityError

MAX_CANONICAL_N = 12

_HEX = "0123456789abcdef"


class CanonicalForm:
    """Key string plus the canonical representative hypergraph.

    Two hypergraphs get equal keys exactly when they are isomorphic.
    """

    __slots__ = ("key", "representative")

    def __init__(self, key: str, representative: Hypergraph):
        self.key = key
        self.representative = representative

    def __eq__(self, other) -> bool:
        if isinstance(other, CanonicalForm):
            return self.key == other.key
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.key)

    def __str__(self) -> str:
        return self.key

    def __repr__(self) -> str:
        return f"CanonicalForm({self.key!r})"


def _swap_invariant(h: Hypergraph, u: int, v: int) -> bool:
    """Is the transposition of u and v an automorphism?"""
    swap = (1 << u) | (1 << v)
    edge_set = h._edge_set
    for em in h.edge_masks:
        hit = em & swap
        if hit and hit != swap and (em ^ swap) not in edge_set:
            return False
    return True


def canonical_form(h: Hypergraph) -> CanonicalForm:
    """Canonical form of ``h``; raises :class:`CapacityError` above n = 12."""
    n, r = h.n, h.r
    if n > MAX_CANONICAL_N:
        raise CapacityError(f"canonical forms support n <= {MAX_CANONICAL_N}, got {n}")
    m = h.m
    if m == 0:
        return CanonicalForm(_key(h), h)

    edges = h.edges
    incident = [[] for _ in range(n)]
    for ei, e in enumerate(edges):
        for v in e:
            incident[v].append(ei)

    twin = [0] * n
    cls = 0
    assigned = [False] * n
    for u in range(n):
        if assigned[u]:
            continue
        twin[u] = cls
        assigned[u] = True
        for v in range(u + 1, n):
            if not assigned[v] and _swap_invariant(h, u, v):
                twin[v] = cls
                assigned[v] = True
        cls += 1

    best = list(h.edge_masks)  # identity labeling as the initial incumbent
    new_label = [-1] * n
    unplaced_in = [r] * m
    prefix: list[int] = []

    def place(depth: int) -> None:
        if len(prefix) == m:
            if prefix < best:
                best[:] = prefix
            return
        tried: set[int] = set()
        for v in range(n):
            if new_label[v] >= 0 or twin[v] in tried:
                continue
            tried.add(twin[v])
            new_label[v] = depth
            batch = []
            for ei in incident[v]:
                unplaced_in[ei] -= 1
                if unplaced_in[ei] == 0:
                    mask = 0
                    for u in edges[ei]:
                        mask |= 1 << new_label[u]
                    batch.append(mask)
            batch.sort()
            prefix.extend(batch)
            # decided masks form a prefix of any completion from here
            p = prefix
            t = len(p)
            worse = p[:t] > best[:t] or (t == m and p == best)
            if not worse:
                place(depth + 1)
            del prefix[t - len(batch):]
            for ei in incident[v]:
                unplaced_in[ei] += 1
            new_label[v] = -1

    place(0)
    rep = Hypergraph.from_masks(r, n, best)
    return CanonicalForm(_key(rep), rep)


def _key(h: Hypergraph) -> str:
    body = ",".join("".join(_HEX[v] for v in e) for e in h.edges)
    return f"{h.r}:{h.n}:{body}"
