"""Hot search kernel: pruned include/exclude enumeration for 3-graphs.

The engine in :mod:`hypertri.search` walks the C(n,3) edge slots in colex
order, deciding each include/exclude.  For r = 3 that walk is delegated to
the kernel below, which keeps all state in flat numpy arrays so numba can
compile it.  The same function also runs as plain Python; set

    HYPERTRI_PURE_PYTHON=1

to force the interpreted path (or pass ``use_numba=False``).  Run
``python -m hypertri.benchmark`` to compare both.

State per (unordered) vertex pair p:
    cnt[p]  edges currently included that contain p
    rem[p]  undecided slots containing p
    nb[p]   bit mask of third vertices w with p+{w} included

Pruning rules (each can be disabled; leaves are always re-verified):
  (a) an inclusion may not complete a generalized triangle: either the new
      edge closes an existing cherry (two edges sharing a pair, plus an edge
      through their differing vertices avoiding that pair), or it forms a
      new cherry that an existing edge closes;
  (b) once a pair has an included edge it must end with at least ``minreq``
      neighbors, so cnt[p] + rem[p] >= minreq is forced.

Leaf verification is exact and independent of the pruning flags: nonempty,
every touched pair has >= minreq neighbors, no generalized triangle, and
(optionally) no strong 3-coloring of the co-occurrence graph.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    njit = None
    HAS_NUMBA = False

NUMBA_DEFAULT = HAS_NUMBA and os.environ.get("HYPERTRI_PURE_PYTHON", "") not in ("1", "true", "yes")


def _triangle_search(
    n,
    minreq,
    forbid_triangle,
    prune_forbidden,
    prune_codegree,
    require_not_partite,
    budget_nodes,
    prefix,
    slot_masks,
    slot_pairs,
    slot_thirds,
    pair_masks,
    pair_of,
    dp_start,
    dp_flat,
    wit_edges,
    wit_len,
    out,
):
    """Depth-first over edge slots; fills ``out`` and the witness buffers.

    out[0] nodes explored, out[1] leaf solutions, out[2] witnesses stored,
    out[3] node budget hit, out[4] witness buffers overflowed, out[5] the
    forced prefix was already infeasible.
    """
    nslots = slot_masks.shape[0]
    npairs = pair_masks.shape[0]
    plen = prefix.shape[0]
    max_wit = wit_len.shape[0]
    cap_edges = wit_edges.shape[0]

    cnt = np.zeros(npairs, np.int64)
    rem = np.full(npairs, n - 2, np.int64)
    nb = np.zeros(npairs, np.int64)
    edges = np.zeros(nslots + 1, np.int64)
    taken = np.full(nslots + 1, -1, np.int64)
    m = 0

    nodes = 0
    solutions = 0
    stored = 0
    edge_ptr = 0
    budget_hit = 0
    overflow = 0
    prefix_dead = 0

    # scratch for the leaf 3-coloring check
    adjacency = np.zeros(n + 1, np.int64)
    trial = np.zeros(n + 1, np.int64)
    usedbefore = np.zeros(n + 2, np.int64)

    # ---- forced prefix decisions ----
    for s in range(plen):
        choice = prefix[s]
        nodes += 1
        em = slot_masks[s]
        feasible = True
        if choice == 1:
            edges[m] = em
            m += 1
            for j in range(3):
                p = slot_pairs[s, j]
                was_zero = cnt[p] == 0
                cnt[p] += 1
                rem[p] -= 1
                nb[p] |= 1 << slot_thirds[s, j]
                if prune_codegree and was_zero and cnt[p] + rem[p] < minreq:
                    feasible = False
            if feasible and forbid_triangle and prune_forbidden:
                for j in range(3):
                    p = slot_pairs[s, j]
                    w = slot_thirds[s, j]
                    others = nb[p] & ~(1 << w)
                    notp = ~pair_masks[p]
                    for u in range(n):
                        if not (others >> u) & 1:
                            continue
                        if nb[pair_of[u, w]] & notp:
                            feasible = False
                            break
                    if not feasible:
                        break
                if feasible:
                    for t in range(dp_start[s], dp_start[s + 1]):
                        x = nb[dp_flat[t]] & em
                        if x & (x - 1):
                            feasible = False
                            break
        else:
            for j in range(3):
                p = slot_pairs[s, j]
                rem[p] -= 1
                if prune_codegree and cnt[p] != 0 and cnt[p] + rem[p] < minreq:
                    feasible = False
        if not feasible:
            prefix_dead = 1
            break

    # ---- depth-first search below the prefix ----
    pos = plen
    going_down = True
    while not prefix_dead:
        if going_down:
            if pos == nslots:
                # leaf: exact verification
                good = m > 0
                if good:
                    for p in range(npairs):
                        c = cnt[p]
                        if c != 0 and c < minreq:
                            good = False
                            break
                if good and forbid_triangle:
                    for p in range(npairs):
                        if not good:
                            break
                        if cnt[p] < 2:
                            continue
                        x = nb[p]
                        notp = ~pair_masks[p]
                        for a in range(n):
                            if not (x >> a) & 1:
                                continue
                            for b in range(a + 1, n):
                                if not (x >> b) & 1:
                                    continue
                                if nb[pair_of[a, b]] & notp:
                                    good = False
                                    break
                            if not good:
                                break
                if good and require_not_partite:
                    for v in range(n):
                        adjacency[v] = 0
                    for t in range(m):
                        em = edges[t]
                        for v in range(n):
                            if (em >> v) & 1:
                                adjacency[v] |= em & ~(1 << v)
                    colmask0 = 0
                    colmask1 = 0
                    colmask2 = 0
                    d = 0
                    trial[0] = -1
                    usedbefore[0] = 0
                    while d >= 0 and d < n:
                        prev = trial[d]
                        if prev == 0:
                            colmask0 &= ~(1 << d)
                        elif prev == 1:
                            colmask1 &= ~(1 << d)
                        elif prev == 2:
                            colmask2 &= ~(1 << d)
                        c = prev + 1
                        lim = usedbefore[d]
                        if lim > 2:
                            lim = 2
                        placed = np.int64(-1)
                        while c <= lim:
                            if c == 0 and (colmask0 & adjacency[d]) == 0:
                                placed = c
                                break
                            if c == 1 and (colmask1 & adjacency[d]) == 0:
                                placed = c
                                break
                            if c == 2 and (colmask2 & adjacency[d]) == 0:
                                placed = c
                                break
                            c += 1
                        if placed >= 0:
                            trial[d] = placed
                            if placed == 0:
                                colmask0 |= 1 << d
                            elif placed == 1:
                                colmask1 |= 1 << d
                            else:
                                colmask2 |= 1 << d
                            if placed == usedbefore[d]:
                                usedbefore[d + 1] = usedbefore[d] + 1
                            else:
                                usedbefore[d + 1] = usedbefore[d]
                            d += 1
                            if d < n:
                                trial[d] = -1
                        else:
                            trial[d] = -1
                            d -= 1
                    if d == n:  # colorable, hence r-partite
                        good = False
                if good:
                    solutions += 1
                    if stored < max_wit and edge_ptr + m <= cap_edges:
                        for t in range(m):
                            wit_edges[edge_ptr + t] = edges[t]
                        edge_ptr += m
                        wit_len[stored] = m
                        stored += 1
                    else:
                        overflow = 1
                going_down = False
                pos -= 1
                if pos < plen:
                    break
                continue
            choice = np.int64(1)  # include branch first
        else:
            # back at pos with a decision applied: undo it, then advance
            applied = taken[pos]
            if applied == 1:
                m -= 1
                for j in range(3):
                    p = slot_pairs[pos, j]
                    cnt[p] -= 1
                    rem[p] += 1
                    nb[p] &= ~(1 << slot_thirds[pos, j])
            else:
                for j in range(3):
                    rem[slot_pairs[pos, j]] += 1
            if applied == 1:
                choice = np.int64(0)
            else:
                taken[pos] = -1
                pos -= 1
                if pos < plen:
                    break
                continue

        # apply `choice` at `pos`; state is fully updated even when pruned
        nodes += 1
        if nodes >= budget_nodes:
            budget_hit = 1
            break
        taken[pos] = choice
        em = slot_masks[pos]
        feasible = True
        if choice == 1:
            edges[m] = em
            m += 1
            for j in range(3):
                p = slot_pairs[pos, j]
                was_zero = cnt[p] == 0
                cnt[p] += 1
                rem[p] -= 1
                nb[p] |= 1 << slot_thirds[pos, j]
                if prune_codegree and was_zero and cnt[p] + rem[p] < minreq:
                    feasible = False
            if feasible and forbid_triangle and prune_forbidden:
                for j in range(3):
                    p = slot_pairs[pos, j]
                    w = slot_thirds[pos, j]
                    others = nb[p] & ~(1 << w)
                    notp = ~pair_masks[p]
                    for u in range(n):
                        if not (others >> u) & 1:
                            continue
                        if nb[pair_of[u, w]] & notp:
                            feasible = False
                            break
                    if not feasible:
                        break
                if feasible:
                    for t in range(dp_start[pos], dp_start[pos + 1]):
                        x = nb[dp_flat[t]] & em
                        if x & (x - 1):
                            feasible = False
                            break
        else:
            for j in range(3):
                p = slot_pairs[pos, j]
                rem[p] -= 1
                if prune_codegree and cnt[p] != 0 and cnt[p] + rem[p] < minreq:
                    feasible = False

        if feasible:
            pos += 1
            going_down = True
        else:
            going_down = False

    out[0] = nodes
    out[1] = solutions
    out[2] = stored
    out[3] = budget_hit
    out[4] = overflow
    out[5] = prefix_dead


triangle_search_py = _triangle_search
if HAS_NUMBA:
    triangle_search_jit = njit(cache=True, nogil=True)(_triangle_search)
else:  # pragma: no cover
    triangle_search_jit = None


@lru_cache(maxsize=32)
def triangle_geometry(n: int):
    """Precomputed colex slot/pair tables for 3-graphs on n vertices."""
    pairs = sorted((1 << u) | (1 << v) for u, v in combinations(range(n), 2))
    pair_id = {pm: i for i, pm in enumerate(pairs)}
    pair_masks = np.array(pairs, np.int64) if pairs else np.zeros(0, np.int64)
    pair_of = np.zeros((n, n), np.int64)
    for u, v in combinations(range(n), 2):
        pid = pair_id[(1 << u) | (1 << v)]
        pair_of[u, v] = pid
        pair_of[v, u] = pid

    slots = sorted(
        (1 << a) | (1 << b) | (1 << c) for a, b, c in combinations(range(n), 3)
    )
    nslots = len(slots)
    slot_masks = np.array(slots, np.int64) if slots else np.zeros(0, np.int64)
    slot_pairs = np.zeros((nslots, 3), np.int64)
    slot_thirds = np.zeros((nslots, 3), np.int64)
    dp_start = np.zeros(nslots + 1, np.int64)
    dp_rows: list[int] = []
    for s, em in enumerate(slots):
        vs = [i for i in range(n) if em >> i & 1]
        for j in range(3):
            w = vs[2 - j]
            slot_pairs[s, j] = pair_id[em & ~(1 << w)]
            slot_thirds[s, j] = w
        for pid, pm in enumerate(pairs):
            if pm & em == 0:
                dp_rows.append(pid)
        dp_start[s + 1] = len(dp_rows)
    dp_flat = np.array(dp_rows, np.int64) if dp_rows else np.zeros(0, np.int64)
    return {
        "npairs": len(pairs),
        "nslots": nslots,
        "slot_masks": slot_masks,
        "slot_pairs": slot_pairs,
        "slot_thirds": slot_thirds,
        "pair_masks": pair_masks,
        "pair_of": pair_of,
        "dp_start": dp_start,
        "dp_flat": dp_flat,
    }


def run_triangle_search(
    n: int,
    minreq: int,
    forbid_triangle: bool,
    require_not_partite: bool,
    budget_nodes: int,
    prefix=(),
    prune_forbidden: bool = True,
    prune_codegree: bool = True,
    max_witnesses: int = 400_000,
    witness_edge_capacity: int = 4_000_000,
    use_numba: bool | None = None,
):
    """Run one (sub)tree search and decode the results.

    Returns a dict with nodes, solutions, witnesses (edge-mask tuples),
    budget_hit, overflow, prefix_dead.
    """
    geo = triangle_geometry(n)
    prefix_arr = np.array(list(prefix), np.int8) if len(prefix) else np.zeros(0, np.int8)
    wit_edges = np.zeros(witness_edge_capacity, np.int64)
    wit_len = np.zeros(max_witnesses, np.int64)
    out = np.zeros(6, np.int64)
    jit = NUMBA_DEFAULT if use_numba is None else (use_numba and HAS_NUMBA)
    kernel = triangle_search_jit if jit else triangle_search_py
    kernel(
        n,
        minreq,
        forbid_triangle,
        prune_forbidden,
        prune_codegree,
        require_not_partite,
        budget_nodes,
        prefix_arr,
        geo["slot_masks"],
        geo["slot_pairs"],
        geo["slot_thirds"],
        geo["pair_masks"],
        geo["pair_of"],
        geo["dp_start"],
        geo["dp_flat"],
        wit_edges,
        wit_len,
        out,
    )
    witnesses = []
    ptr = 0
    for i in range(int(out[2])):
        k = int(wit_len[i])
        witnesses.append(tuple(int(x) for x in wit_edges[ptr:ptr + k]))
        ptr += k
    return {
        "nodes": int(out[0]),
        "solutions": int(out[1]),
        "witnesses": witnesses,
        "budget_hit": bool(out[3]),
        "overflow": bool(out[4]),
        "prefix_dead": bool(out[5]),
    }
