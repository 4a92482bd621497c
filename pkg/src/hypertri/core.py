"""Exact r-uniform hypergraphs and their degree/shadow primitives.

Data model
----------
Vertices are dense integers ``0..n-1``; ``n`` is authoritative, so isolated
vertices exist even though no edge mentions them.  Every vertex set (edges
included) is held internally as an integer bit mask, which caps ``n`` at 128;
all set algebra is bitwise and all threshold comparisons are exact integer
arithmetic (no floats anywhere in a decision path).

For equal-size sets, colexicographic order coincides with numeric order of
the bit masks, so edge lists are simply kept sorted by mask value.

The ``.hg`` interchange format::

    # comment lines start with '#'
    r n m
    v1 v2 ... vr        (m lines, ascending vertex ids, no duplicates)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, Mapping

from .errors import CapacityError, HgParseError

MAX_VERTICES = 128


def mask_of(vertices: Iterable[int]) -> int:
    """Bit mask of a vertex collection."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Ascending vertex tuple of a bit mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class VertexSet:
    """Immutable subset of the vertices ``0..n-1`` of some hypergraph.

    Supports membership, ascending iteration, size, and the usual set
    algebra via ``&``, ``|`` and ``-``.
    """

    __slots__ = ("mask", "n")

    def __init__(self, vertices: Iterable[int] | int, n: int):
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        if mask < 0 or mask >> n:
            raise ValueError(f"vertex out of range 0..{n - 1}")
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "n", n)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("VertexSet is immutable")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(vertices_of(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask, max(self.n, other.n))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask, max(self.n, other.n))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask, self.n)

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        if isinstance(other, (set, frozenset, tuple, list)):
            return self.mask == mask_of(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def to_tuple(self) -> tuple[int, ...]:
        return vertices_of(self.mask)

    def __repr__(self) -> str:
        return f"VertexSet({list(self)}, n={self.n})"


class Hypergraph:
    """An r-uniform hypergraph on vertices ``0..n-1``.

    Immutable after construction.  ``edges`` is the deduplicated edge set in
    colex order, each edge an ascending vertex tuple.  The shadow index is
    built once on first use and cached.
    """

    __slots__ = ("r", "n", "edge_masks", "_edge_set", "_shadow")

    def __init__(self, r: int, n: int, edges: Iterable[Iterable[int]] = ()):
        if r < 2:
            raise ValueError(f"uniformity must be at least 2, got {r}")
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if n > MAX_VERTICES:
            raise CapacityError(
                f"n = {n} exceeds the bit-mask width ({MAX_VERTICES} vertices)"
            )
        masks = set()
        for edge in edges:
            vs = tuple(edge)
            m = mask_of(vs)
            if len(vs) != r or m.bit_count() != r:
                raise ValueError(f"edge {sorted(vs)} does not have {r} distinct vertices")
            if m >> n:
                raise ValueError(f"edge {sorted(vs)} uses a vertex >= n = {n}")
            masks.add(m)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edge_masks", tuple(sorted(masks)))
        object.__setattr__(self, "_edge_set", frozenset(masks))
        object.__setattr__(self, "_shadow", None)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Hypergraph is immutable")

    @classmethod
    def from_masks(cls, r: int, n: int, masks: Iterable[int]) -> "Hypergraph":
        return cls(r, n, (vertices_of(m) for m in masks))

    @property
    def m(self) -> int:
        return len(self.edge_masks)

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(vertices_of(m) for m in self.edge_masks)

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return mask_of(vertices) in self._edge_set

    def has_edge_mask(self, mask: int) -> bool:
        return mask in self._edge_set

    def relabel(self, perm: Iterable[int]) -> "Hypergraph":
        """Image under the vertex bijection ``v -> perm[v]``."""
        p = tuple(perm)
        if len(p) != self.n or set(p) != set(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Hypergraph(
            self.r, self.n, (tuple(p[v] for v in e) for e in self.edges)
        )

    def shadow_index(self) -> "ShadowIndex":
        if self._shadow is None:
            object.__setattr__(self, "_shadow", ShadowIndex._build(self))
        return self._shadow

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.r, self.n, self.edge_masks) == (other.r, other.n, other.edge_masks)

    def __hash__(self) -> int:
        return hash((self.r, self.n, self.edge_masks))

    def __repr__(self) -> str:
        return f"Hypergraph(r={self.r}, n={self.n}, m={self.m})"


class ShadowIndex(Mapping):
    """Maps each (r-1)-set of the shadow to its nonempty neighborhood.

    Keys are ascending vertex tuples; a key is present exactly when some
    edge contains it.  ``index[e]`` is the :class:`VertexSet` of vertices v
    with ``e + {v}`` an edge.
    """

    __slots__ = ("_data", "n")

    def __init__(self, data: dict[tuple[int, ...], VertexSet], n: int):
        self._data = data
        self.n = n

    @classmethod
    def _build(cls, h: Hypergraph) -> "ShadowIndex":
        acc: dict[int, int] = {}
        for em in h.edge_masks:
            rest = em
            while rest:
                low = rest & -rest
                rest ^= low
                acc[em ^ low] = acc.get(em ^ low, 0) | low
        data = {
            vertices_of(key): VertexSet(nb, h.n) for key, nb in sorted(acc.items())
        }
        return cls(data, h.n)

    def __getitem__(self, key: Iterable[int]) -> VertexSet:
        return self._data[tuple(key)]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def neighborhood(self, key: Iterable[int]) -> VertexSet:
        """Neighborhood of an (r-1)-set; empty if it is outside the shadow."""
        return self._data.get(tuple(sorted(key)), VertexSet(0, self.n))


@dataclass(frozen=True)
class Threshold:
    """A rational lower bound ``numerator/denominator``, compared exactly.

    ``admits(k)`` decides the strict inequality k > numerator/denominator by
    integer cross-multiplication.  The fraction is kept unreduced so reports
    can show the bound exactly as configured.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")

    @classmethod
    def codegree_bound(cls, r: int, n: int) -> "Threshold":
        """The tight bound 2n/(2r+1) for the codegree partiteness theorem."""
        return cls(2 * n, 2 * r + 1)

    def admits(self, value: int) -> bool:
        return value * self.denominator > self.numerator

    def required_minimum(self) -> int:
        """Least integer strictly above the bound."""
        return self.numerator // self.denominator + 1

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def reduced(self) -> "Threshold":
        g = gcd(self.numerator, self.denominator)
        return Threshold(self.numerator // g, self.denominator // g)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


# ---------------------------------------------------------------------------
# degree / shadow / neighborhood operations
# ---------------------------------------------------------------------------


def shadow(h: Hypergraph) -> ShadowIndex:
    """The shadow of ``h`` with full neighborhoods, cached on ``h``."""
    return h.shadow_index()


def ith_shadow(h: Hypergraph, i: int) -> set[tuple[int, ...]]:
    """All (r-i)-subsets of edges of ``h``, for ``1 <= i <= r-1``."""
    if not 1 <= i <= h.r - 1:
        raise ValueError(f"shadow depth i must be in 1..{h.r - 1}, got {i}")
    out: set[tuple[int, ...]] = set()
    for e in h.edges:
        out.update(combinations(e, h.r - i))
    return out


def neighborhood_of_vertex(h: Hypergraph, v: int) -> VertexSet:
    """All vertices sharing at least one edge with ``v``."""
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} out of range 0..{h.n - 1}")
    bit = 1 << v
    nb = 0
    for em in h.edge_masks:
        if em & bit:
            nb |= em
    return VertexSet(nb & ~bit, h.n)


def link_of_set(h: Hypergraph, s: Iterable[int]) -> set[tuple[int, ...]]:
    """The link of an i-set: all (r-i)-sets completing it to an edge."""
    smask = mask_of(s)
    size = smask.bit_count()
    if not 1 <= size <= h.r - 1:
        raise ValueError(f"set size must be in 1..{h.r - 1}, got {size}")
    if smask >> h.n:
        raise ValueError("set uses a vertex >= n")
    return {vertices_of(em & ~smask) for em in h.edge_masks if em & smask == smask}


def degree_of_set(h: Hypergraph, s: Iterable[int]) -> int:
    """Number of edges containing the given i-set."""
    return len(link_of_set(h, s))


def min_positive_codegree(h: Hypergraph) -> int:
    """Minimum neighborhood size over the shadow; 0 for an edgeless graph.

    The minimum ranges only over (r-1)-sets that extend to at least one
    edge.  On an edgeless hypergraph the shadow is empty and the minimum is
    undefined; this library fixes the value 0 there so that strict threshold
    predicates are vacuously false and extremal maximization skips it.
    """
    idx = h.shadow_index()
    if not idx:
        return 0
    return min(len(nb) for nb in idx.values())


def min_positive_idegree(h: Hypergraph, i: int) -> int:
    """Minimum degree over i-sets contained in at least one edge.

    ``i = r-1`` coincides with :func:`min_positive_codegree`.  Returns 0
    when the relevant shadow is empty (edgeless convention).
    """
    if not 1 <= i <= h.r - 1:
        raise ValueError(f"i must be in 1..{h.r - 1}, got {i}")
    counts: dict[tuple[int, ...], int] = {}
    for e in h.edges:
        for s in combinations(e, i):
            counts[s] = counts.get(s, 0) + 1
    if not counts:
        return 0
    return min(counts.values())


def degree_stats(h: Hypergraph) -> tuple[int, int, Fraction]:
    """(min, max, average) vertex degree; isolated vertices count as 0.

    The average is the exact rational r*m/n.
    """
    if h.n == 0:
        raise ValueError("degree statistics are undefined on 0 vertices")
    deg = [0] * h.n
    for e in h.edges:
        for v in e:
            deg[v] += 1
    return min(deg), max(deg), Fraction(h.r * h.m, h.n)


def is_independent(h: Hypergraph, vertices: Iterable[int]) -> bool:
    """True when every edge meets the given set in at most one vertex."""
    imask = vertices.mask if isinstance(vertices, VertexSet) else mask_of(vertices)
    if imask >> h.n:
        raise ValueError("set uses a vertex >= n")
    for em in h.edge_masks:
        hit = em & imask
        if hit and hit.bit_count() > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# .hg interchange format
# ---------------------------------------------------------------------------


def parse_hg(text: str) -> Hypergraph:
    """Parse ``.hg`` text.  Raises :class:`HgParseError` with a line number."""
    header: tuple[int, int, int] | None = None
    edges: list[tuple[int, ...]] = []
    seen: set[int] = set()
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise HgParseError(f"non-integer field in {line!r}", lineno)
        if header is None:
            if len(values) != 3:
                raise HgParseError("header must be 'r n m'", lineno)
            r, n, m = values
            if r < 2 or n < 0 or m < 0:
                raise HgParseError(f"bad header values r={r} n={n} m={m}", lineno)
            header = (r, n, m)
            header_line = lineno
            continue
        r, n, m = header
        if len(edges) >= m:
            raise HgParseError(f"more than the declared m = {m} edge lines", lineno)
        if len(values) != r:
            raise HgParseError(f"expected {r} vertex ids, got {len(values)}", lineno)
        if any(not 0 <= v < n for v in values):
            raise HgParseError(f"vertex id out of range 0..{n - 1}", lineno)
        if any(a >= b for a, b in zip(values, values[1:])):
            raise HgParseError("vertex ids must be strictly ascending", lineno)
        em = mask_of(values)
        if em in seen:
            raise HgParseError(f"duplicate edge {' '.join(fields)}", lineno)
        seen.add(em)
        edges.append(tuple(values))
    if header is None:
        raise HgParseError("missing 'r n m' header")
    r, n, m = header
    if len(edges) != m:
        raise HgParseError(
            f"declared m = {m} but found {len(edges)} edge lines", header_line
        )
    if n > MAX_VERTICES:
        raise CapacityError(f"n = {n} exceeds the bit-mask width ({MAX_VERTICES})")
    return Hypergraph(r, n, edges)


def format_hg(h: Hypergraph) -> str:
    """Canonical ``.hg`` serialization: header plus edges in colex order."""
    lines = [f"{h.r} {h.n} {h.m}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def load_hg(path) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hg(fh.read())


def save_hg(h: Hypergraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_hg(h))
