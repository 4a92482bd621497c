"""Detection of forbidden configurations inside a host hypergraph.

Covers generic pattern copies (injective vertex maps sending pattern edges
onto host edges), the generalized triangle, the relaxed three-edge family
where the third edge may meet the shared core, cliques in the pair shadow,
and clique expansions.

Witness determinism: the specialized detectors scan edges in colex order and
return the lexicographically least witness triple, so tests can assert exact
witnesses.  ``find_embedding`` returns the first embedding under a fixed,
documented search order (pattern vertices by decreasing degree, host
candidates ascending); only existence is order-independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import expansion_of_clique, generalized_triangle
from .core import Hypergraph, ith_shadow, mask_of, vertices_of


@dataclass(frozen=True)
class Embedding:
    """An injective vertex map witnessing a pattern copy inside a host.

    ``mapping[p]`` is the host image of pattern vertex ``p``.
    """

    pattern: Hypergraph
    host: Hypergraph
    mapping: tuple[int, ...]


def verify_embedding(emb: Embedding) -> bool:
    """Check injectivity, range, and that every pattern edge maps onto a
    host edge.  Independent of how the embedding was found."""
    if len(emb.mapping) != emb.pattern.n:
        return False
    if len(set(emb.mapping)) != emb.pattern.n:
        return False
    if any(not 0 <= v < emb.host.n for v in emb.mapping):
        return False
    for e in emb.pattern.edges:
        if not emb.host.has_edge_mask(mask_of(emb.mapping[v] for v in e)):
            return False
    return True


def find_embedding(host: Hypergraph, pattern: Hypergraph) -> Embedding | None:
    """Backtracking search for a copy of ``pattern`` inside ``host``.

    Pattern vertices are assigned in decreasing-degree order; host
    candidates are filtered by degree feasibility, and every pattern edge is
    checked the moment its last vertex is mapped.
    """
    if host.r != pattern.r:
        raise ValueError(f"uniformity mismatch: host r={host.r}, pattern r={pattern.r}")
    k = pattern.n
    if k > host.n:
        return None
    pdeg = [0] * k
    for e in pattern.edges:
        for v in e:
            pdeg[v] += 1
    hdeg = [0] * host.n
    for e in host.edges:
        for v in e:
            hdeg[v] += 1
    order = sorted(range(k), key=lambda v: (-pdeg[v], v))
    pedges = pattern.edges
    edges_at = [[] for _ in range(k)]
    for ei, e in enumerate(pedges):
        for v in e:
            edges_at[v].append(ei)
    unmapped = [pattern.r] * len(pedges)
    image = [-1] * k
    used = [0]  # bit mask of occupied host vertices

    def assign(idx: int) -> bool:
        if idx == k:
            return True
        pv = order[idx]
        need = pdeg[pv]
        for hv in range(host.n):
            bit = 1 << hv
            if used[0] & bit or hdeg[hv] < need:
                continue
            image[pv] = hv
            used[0] |= bit
            ok = True
            touched = []
            for ei in edges_at[pv]:
                unmapped[ei] -= 1
                touched.append(ei)
                if unmapped[ei] == 0:
                    em = mask_of(image[u] for u in pedges[ei])
                    if not host.has_edge_mask(em):
                        ok = False
                        break
            if ok and assign(idx + 1):
                return True
            for ei in touched:
                unmapped[ei] += 1
            image[pv] = -1
            used[0] ^= bit
        return False

    if assign(0):
        return Embedding(pattern, host, tuple(image))
    return None


@dataclass(frozen=True)
class SigmaWitness:
    """Edges a, b sharing all but one vertex, plus an edge c covering the
    two vertices where a and b differ."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]


def _pair_superedges(h: Hypergraph) -> dict[int, list[int]]:
    """Map each 2-set mask to the colex-sorted edges containing it."""
    out: dict[int, list[int]] = {}
    for em in h.edge_masks:
        vs = vertices_of(em)
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                pm = (1 << vs[i]) | (1 << vs[j])
                out.setdefault(pm, []).append(em)
    return out


def contains_sigma(h: Hypergraph) -> SigmaWitness | None:
    """Least witness triple (a, b, c) with |a & b| = r-1 and the symmetric
    difference of a, b inside c; c may meet the shared core."""
    masks = h.edge_masks
    index = _pair_superedges(h)
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if (a & b).bit_count() != h.r - 1:
                continue
            for c in index.get(a ^ b, ()):
                return SigmaWitness(vertices_of(a), vertices_of(b), vertices_of(c))
    return None


def contains_generalized_triangle(h: Hypergraph) -> Embedding | None:
    """Specialized search for a generalized-triangle copy.

    Enumerates edge pairs (a, b) sharing r-1 vertices in colex order, then
    seeks an edge c covering the two differing vertices and avoiding the
    shared core.  Must agree with ``find_embedding`` against the pattern
    from :func:`generalized_triangle`.
    """
    masks = h.edge_masks
    index = _pair_superedges(h)
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            core = a & b
            if core.bit_count() != h.r - 1:
                continue
            for c in index.get(a ^ b, ()):
                if c & core == 0:
                    return _triangle_embedding(h, a, b, c)
    return None


def _triangle_embedding(h: Hypergraph, a: int, b: int, c: int) -> Embedding:
    """Assemble the embedding determined by a found triple."""
    pattern = generalized_triangle(h.r)
    core = vertices_of(a & b)
    av = vertices_of(a & ~b)[0]
    bv = vertices_of(b & ~a)[0]
    tail = vertices_of(c & ~(1 << av) & ~(1 << bv))
    return Embedding(pattern, h, tuple(core) + (av, bv) + tail)


def has_clique(adjacency: list[int], k: int) -> bool:
    """Does a graph given by adjacency bit masks contain a k-clique?

    Backtracking over candidate masks after iteratively discarding vertices
    of degree below k-1.
    """
    n = len(adjacency)
    if k <= 0:
        return True
    if k == 1:
        return n >= 1
    alive = (1 << n) - 1
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if alive >> v & 1 and (adjacency[v] & alive).bit_count() < k - 1:
                alive ^= 1 << v
                changed = True
    if alive.bit_count() < k:
        return False

    def grow(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if grow(adjacency[v] & cand, need - 1):
                return True
        return False

    return grow(alive, k)


def contains_clique_in_ith_shadow(h: Hypergraph, k: int, i: int) -> bool:
    """True when the 2-graph obtained as the i-th shadow has a k-clique.

    Only ``i = r-2`` is supported (the shadow then consists of 2-sets).
    """
    if i != h.r - 2 or i < 1:
        raise ValueError(f"only i = r-2 is supported and needs r >= 3; got i={i}, r={h.r}")
    adjacency = [0] * h.n
    for u, v in ith_shadow(h, i):
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
    return has_clique(adjacency, k)


def contains_expansion(h: Hypergraph, ell: int) -> bool:
    """True when the host contains the clique expansion with ell+1 core
    vertices (every core pair padded by r-2 private vertices)."""
    if not ell >= h.r >= 3:
        raise ValueError(f"expansion needs ell >= r >= 3, got ell={ell}, r={h.r}")
    return find_embedding(h, expansion_of_clique(h.r, ell)) is not None
