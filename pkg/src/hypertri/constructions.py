"""Generators for the named hypergraph families used throughout the package.

Vertex numbering is fixed per generator so that fixtures, witnesses and
``.hg`` serializations are reproducible:

* ``wheel5``: hub vertices first (``0..r-3``), then the five rim vertices.
* ``blowup``: classes in base-vertex order, consecutive ids inside a class.
* ``balanced_r_partite``: larger parts first, parts consecutive.
* ``expansion_of_clique``: the ``l+1`` core vertices first, then one block of
  ``r-2`` fresh vertices per core pair, pairs in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .core import Hypergraph


def complete(r: int, m: int) -> Hypergraph:
    """The complete r-graph on m vertices."""
    if m < r:
        raise ValueError(f"complete r-graph needs m >= r, got m={m} < r={r}")
    return Hypergraph(r, m, combinations(range(m), r))


def generalized_triangle(r: int) -> Hypergraph:
    """Three edges on 2r-1 vertices: two sharing the core 0..r-2 and
    differing in r-1 vs r, plus an edge through {r-1, r} avoiding the core.

    For r = 2 this degenerates to the graph triangle.
    """
    if r < 2:
        raise ValueError(f"generalized triangle needs r >= 2, got {r}")
    core = tuple(range(r - 1))
    a = core + (r - 1,)
    b = core + (r,)
    c = tuple(range(r - 1, 2 * r - 1))
    return Hypergraph(r, 2 * r - 1, (a, b, c))


def wheel5(r: int) -> Hypergraph:
    """The r-uniform 5-wheel: r-2 hub vertices shared by five edges running
    cyclically around five rim vertices."""
    if r < 3:
        raise ValueError(f"5-wheel needs r >= 3, got {r}")
    hub = tuple(range(r - 2))
    rim = tuple(range(r - 2, r + 3))
    edges = [hub + (rim[i], rim[(i + 1) % 5]) for i in range(5)]
    return Hypergraph(r, r + 3, edges)


@dataclass(frozen=True)
class BlowupSpec:
    """A base hypergraph plus one positive class size per base vertex."""

    base: Hypergraph
    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if len(self.sizes) != self.base.n:
            raise ValueError(
                f"need {self.base.n} class sizes, got {len(self.sizes)}"
            )
        if any(s < 1 for s in self.sizes):
            raise ValueError("every class size must be at least 1")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def vertex_class(self, base_vertex: int) -> range:
        start = sum(self.sizes[:base_vertex])
        return range(start, start + self.sizes[base_vertex])


def blowup(spec: BlowupSpec) -> Hypergraph:
    """Replace each base vertex by a class of clones and each base edge by
    all transversals of its classes."""
    edges = []
    for e in spec.base.edges:
        for tv in product(*(spec.vertex_class(v) for v in e)):
            edges.append(tv)
    return Hypergraph(spec.base.r, spec.n, edges)


def wheel5_blowup(r: int, sizes) -> Hypergraph:
    """Blowup of the r-uniform 5-wheel with the given r+3 class sizes."""
    return blowup(BlowupSpec(wheel5(r), tuple(sizes)))


def balanced_r_partite(r: int, n: int) -> Hypergraph:
    """All transversal edges over r parts of near-equal size (larger first)."""
    if n < r:
        raise ValueError(f"balanced r-partite r-graph needs n >= r, got n={n}")
    q, rem = divmod(n, r)
    sizes = [q + 1] * rem + [q] * (r - rem)
    parts = []
    start = 0
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    return Hypergraph(r, n, product(*parts))


def expansion_of_clique(r: int, ell: int) -> Hypergraph:
    """The complete graph on ell+1 core vertices with each core pair padded
    by its own block of r-2 fresh vertices."""
    if not ell >= r >= 3:
        raise ValueError(f"expansion needs ell >= r >= 3, got ell={ell}, r={r}")
    core = ell + 1
    edges = []
    fresh = core
    for i, j in combinations(range(core), 2):
        block = tuple(range(fresh, fresh + r - 2))
        fresh += r - 2
        edges.append((i, j) + block)
    return Hypergraph(r, fresh, edges)


def clique_plus_isolated(r: int, n: int) -> Hypergraph:
    """The complete r-graph on 2r-2 vertices plus n-(2r-2) isolated ones."""
    if n < 2 * r - 2:
        raise ValueError(f"need n >= 2r-2 = {2 * r - 2}, got n={n}")
    return Hypergraph(r, n, combinations(range(2 * r - 2), r))
