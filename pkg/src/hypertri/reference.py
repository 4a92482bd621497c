"""Brute-force reference implementations.

These oracles deliberately avoid the engines they are used to check: plain
iteration over all subsets, all injective maps, all part assignments, all
permutations.  They are only meant for desk-scale inputs.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import comb

from .core import Hypergraph, mask_of, min_positive_codegree
from .partition import PartitionCertificate, verify_partition
from .patterns import Embedding, find_embedding
from .search import SearchProblem, contains_generalized_triangle


def all_labeled_solutions(problem: SearchProblem) -> set[frozenset[int]]:
    """Every edge subset satisfying the problem, by scanning all 2^C(n,r).

    Constraints are evaluated through the public modules, one hypergraph at
    a time; limited to C(n,r) <= 22 slots.
    """
    from .partition import find_r_partition
    from .search import TRIANGLE, _normalize

    _, triangle, explicit = _normalize(problem)
    r, n = problem.r, problem.n
    slots = sorted(mask_of(c) for c in combinations(range(n), r))
    if len(slots) > 22:
        raise ValueError(f"oracle limited to 22 edge slots, got {len(slots)}")
    solutions = set()
    for bits in range(1, 1 << len(slots)):
        masks = [slots[i] for i in range(len(slots)) if bits >> i & 1]
        h = Hypergraph.from_masks(r, n, masks)
        if not problem.admits_codegree(min_positive_codegree(h)):
            continue
        if triangle and contains_generalized_triangle(h) is not None:
            continue
        if any(find_embedding(h, pat) is not None for pat in explicit):
            continue
        if problem.require_not_r_partite and find_r_partition(h) is not None:
            continue
        solutions.add(frozenset(masks))
    return solutions


def embedding_by_exhaustion(host: Hypergraph, pattern: Hypergraph) -> Embedding | None:
    """Try every injective vertex map in order; None when no copy exists."""
    if host.r != pattern.r:
        raise ValueError("uniformity mismatch")
    k = pattern.n
    if k > host.n:
        return None
    pmasks = pattern.edge_masks
    for image in permutations(range(host.n), k):
        ok = True
        for pm in pmasks:
            em = 0
            rest = pm
            while rest:
                low = rest & -rest
                rest ^= low
                em |= 1 << image[low.bit_length() - 1]
            if not host.has_edge_mask(em):
                ok = False
                break
        if ok:
            return Embedding(pattern, host, tuple(image))
    return None


def partition_by_exhaustion(h: Hypergraph, num_parts: int | None = None) -> PartitionCertificate | None:
    """Scan all num_parts^n assignments for a valid strong coloring."""
    k = h.r if num_parts is None else num_parts
    for assignment in product(range(k), repeat=h.n):
        cert = PartitionCertificate(assignment, k)
        if verify_partition(h, cert):
            return cert
    return None


def isomorphic_by_exhaustion(a: Hypergraph, b: Hypergraph) -> bool:
    """Try all vertex permutations."""
    if (a.r, a.n, a.m) != (b.r, b.n, b.m):
        return False
    target = set(b.edge_masks)
    for perm in permutations(range(a.n)):
        if all(
            mask_of(perm[v] for v in e) in target for e in a.edges
        ):
            return True
    return False


def iterated_shadow(h: Hypergraph, i: int) -> set[tuple[int, ...]]:
    """The i-th shadow computed by literally iterating the shadow map."""
    if not 1 <= i <= h.r - 1:
        raise ValueError("i out of range")
    level = {tuple(e) for e in h.edges}
    for _ in range(i):
        nxt = set()
        for s in level:
            for drop in range(len(s)):
                nxt.add(s[:drop] + s[drop + 1:])
        level = nxt
    return level


def count_subsets(n: int, r: int) -> int:
    return comb(n, r)
