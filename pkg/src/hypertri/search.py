"""Exhaustive search over labeled r-graphs under forbidden-pattern and
codegree constraints, plus the derived solvers.

The engine decides the C(n,r) edge slots in colex order, include branch
first, with two pruning rules: (a) an inclusion may not complete a forbidden
pattern among the included edges, and (b) any (r-1)-set with an included
edge must still be able to reach the required minimum codegree, since the
final neighborhood size is at most the current count plus the undecided
slots containing the set.  The codegree constraint itself is only enforced
at complete leaves because it is not monotone under edge additions.  Leaves
are re-verified exactly before being emitted.

For r = 3 with no explicit patterns, the walk runs in the compiled kernel
(:mod:`hypertri.kernels`); anything else uses the pure-Python engine below.
Witnesses are deduplicated by canonical form, and each surviving class is
reported as its canonical representative, which makes reports independent
of worker count and traversal order.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb

from . import kernels
from .canonical import canonical_form
from .constructions import expansion_of_clique
from .core import (
    Hypergraph,
    Threshold,
    mask_of,
    min_positive_codegree,
    vertices_of,
)
from .errors import CapacityError
from .partition import find_r_partition
from .patterns import contains_generalized_triangle, find_embedding

EXHAUSTIVE_COMPLETE = "exhaustive-complete"
BUDGET_EXHAUSTED = "budget-exhausted"

TRIANGLE = "triangle"

MAX_SEARCH_VERTICES = 16
CHUNK_DEPTH = 6


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits for one search.

    ``max_nodes`` bounds explored decision nodes (globally when running
    sequentially, per worker chunk when ``workers > 1``).  ``max_seconds``
    is checked between subtree chunks and inside the Python engine.
    ``max_witnesses`` stops the scan early once that many labeled solutions
    were collected (existence queries); such a run is reported as
    budget-exhausted, never as an exhaustive verification.
    ``max_stored_witnesses`` caps the labeled witness buffer; hitting it
    also downgrades the status.
    """

    max_nodes: int = 10**10
    max_seconds: float | None = None
    max_witnesses: int | None = None
    max_stored_witnesses: int = 400_000


@dataclass(frozen=True)
class SearchProblem:
    """What to enumerate: scale, codegree threshold, forbidden patterns.

    ``threshold`` is either a :class:`Threshold` (the minimum positive
    codegree must strictly exceed the fraction) or a literal ``int`` k
    (codegree at least k).  ``forbidden`` entries are the string
    ``"triangle"``, a pair ``("expansion", ell)``, or an explicit pattern
    :class:`Hypergraph` of matching uniformity.  The edgeless hypergraph is
    never a solution (its positive codegree is 0 by convention).
    """

    r: int
    n: int
    threshold: Threshold | int
    forbidden: tuple = ()
    require_not_r_partite: bool = False
    budget: SearchBudget = field(default_factory=SearchBudget)

    def __post_init__(self):
        object.__setattr__(self, "forbidden", tuple(self.forbidden))

    def required_minimum(self) -> int:
        if isinstance(self.threshold, Threshold):
            return self.threshold.required_minimum()
        return int(self.threshold)

    def admits_codegree(self, value: int) -> bool:
        if isinstance(self.threshold, Threshold):
            return self.threshold.admits(value)
        return value >= int(self.threshold)

    def threshold_text(self) -> str:
        if isinstance(self.threshold, Threshold):
            return f">{self.threshold}"
        return f">={self.threshold}"


@dataclass(frozen=True)
class Witness:
    """One isomorphism class of solutions: key plus canonical representative."""

    canonical: str
    hypergraph: Hypergraph


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one enumeration.

    ``status`` is exhaustive-complete only when every subtree finished
    within all budgets; the witness list is then exactly the set of
    isomorphism classes of solutions, sorted by canonical key.
    """

    status: str
    nodes_explored: int
    labeled_solutions: int
    witnesses: tuple[Witness, ...]
    elapsed_seconds: float
    problem: SearchProblem

    def to_json_dict(self, include_timing: bool = True) -> dict:
        from .core import format_hg

        doc = {
            "status": self.status,
            "nodes_explored": self.nodes_explored,
            "labeled_solutions": self.labeled_solutions,
            "witness_classes": len(self.witnesses),
            "witnesses": [
                {"canonical": w.canonical, "hg": format_hg(w.hypergraph)}
                for w in self.witnesses
            ],
            "problem": {
                "r": self.problem.r,
                "n": self.problem.n,
                "codegree": self.problem.threshold_text(),
                "forbidden": [_forbidden_text(f) for f in self.problem.forbidden],
                "require_not_r_partite": self.problem.require_not_r_partite,
                "max_nodes": self.problem.budget.max_nodes,
            },
        }
        if include_timing:
            doc["elapsed_seconds"] = round(self.elapsed_seconds, 6)
        return doc


def _forbidden_text(entry) -> str:
    if entry == TRIANGLE:
        return "triangle"
    if isinstance(entry, tuple) and len(entry) == 2 and entry[0] == "expansion":
        return f"expansion({entry[1]})"
    if isinstance(entry, Hypergraph):
        return f"explicit(r={entry.r},n={entry.n},m={entry.m})"
    return repr(entry)


def _normalize(problem: SearchProblem):
    """Validate the problem; return (minreq, triangle_flag, explicit_patterns)."""
    r, n = problem.r, problem.n
    if r < 3:
        raise ValueError(f"search needs r >= 3, got {r}")
    if n < r:
        raise ValueError(f"search needs n >= r, got n={n} < r={r}")
    if n > MAX_SEARCH_VERTICES:
        raise CapacityError(f"search supports n <= {MAX_SEARCH_VERTICES}, got {n}")
    minreq = problem.required_minimum()
    if minreq < 0:
        raise ValueError("literal codegree minimum must be nonnegative")
    triangle = False
    explicit: list[Hypergraph] = []
    for entry in problem.forbidden:
        if entry == TRIANGLE:
            triangle = True
        elif isinstance(entry, tuple) and len(entry) == 2 and entry[0] == "expansion":
            pattern = expansion_of_clique(r, int(entry[1]))
            if pattern.n <= n:
                explicit.append(pattern)
        elif isinstance(entry, Hypergraph):
            if entry.r != r:
                raise ValueError(
                    f"explicit pattern has uniformity {entry.r}, expected {r}"
                )
            if entry.n <= n:
                explicit.append(entry)
        else:
            raise ValueError(f"unrecognized forbidden entry {entry!r}")
    return minreq, triangle, explicit


# ---------------------------------------------------------------------------
# generic Python engine (any r, explicit patterns)
# ---------------------------------------------------------------------------


class _TriangleTracker:
    """Incremental generalized-triangle detection over a growing edge set.

    Tracks, per (r-1)-set, the bit mask of its extension vertices, and per
    vertex pair the list of edges through it.  ``would_create`` answers
    whether adding an edge completes a triangle with the current edges.
    """

    def __init__(self, r: int, n: int):
        self.r = r
        self.n = n
        self.nb: dict[int, int] = {}
        self.rich: set[int] = set()
        self.vp: dict[int, list[int]] = {}

    def would_create(self, em: int) -> bool:
        nb = self.nb
        vp = self.vp
        rest = em
        while rest:
            low = rest & -rest
            rest ^= low
            smask = em ^ low
            w = low.bit_length() - 1
            others = nb.get(smask, 0)
            while others:
                lu = others & -others
                others ^= lu
                u = lu.bit_length() - 1
                for cm in vp.get(lu | low, ()):
                    if cm & smask == 0:
                        return True
        for smask in self.rich:
            if smask & em == 0:
                x = nb[smask] & em
                if x & (x - 1):
                    return True
        return False

    def add(self, em: int) -> None:
        nb = self.nb
        rest = em
        while rest:
            low = rest & -rest
            rest ^= low
            smask = em ^ low
            cur = nb.get(smask, 0) | low
            nb[smask] = cur
            if cur.bit_count() == 2:
                self.rich.add(smask)
        vs = vertices_of(em)
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                self.vp.setdefault((1 << vs[i]) | (1 << vs[j]), []).append(em)

    def remove(self, em: int) -> None:
        nb = self.nb
        rest = em
        while rest:
            low = rest & -rest
            rest ^= low
            smask = em ^ low
            cur = nb[smask] & ~low
            if cur:
                nb[smask] = cur
            else:
                del nb[smask]
            if cur.bit_count() == 1:
                self.rich.discard(smask)
        vs = vertices_of(em)
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                lst = self.vp[(1 << vs[i]) | (1 << vs[j])]
                lst.remove(em)


def _python_search(
    problem: SearchProblem,
    minreq: int,
    triangle: bool,
    explicit: list[Hypergraph],
    prune_forbidden: bool,
    prune_codegree: bool,
    node_budget: int,
    deadline: float | None,
    stored_cap: int,
):
    """Reference engine: same traversal as the kernel, in plain Python."""
    r, n = problem.r, problem.n
    slots = sorted(mask_of(c) for c in combinations(range(n), r))
    subs = sorted(mask_of(c) for c in combinations(range(n), r - 1))
    sub_id = {sm: i for i, sm in enumerate(subs)}
    slot_subs = []
    for em in slots:
        row = []
        rest = em
        while rest:
            low = rest & -rest
            rest ^= low
            row.append(sub_id[em ^ low])
        slot_subs.append(row)
    nslots = len(slots)
    cnt = [0] * len(subs)
    rem = [n - (r - 1)] * len(subs)
    tracker = _TriangleTracker(r, n) if triangle else None
    edges: list[int] = []

    nodes = 0
    solutions = 0
    budget_hit = False
    overflow = False
    witnesses: list[tuple[int, ...]] = []
    taken = [-1] * (nslots + 1)

    def leaf_ok() -> bool:
        if not edges:
            return False
        h = Hypergraph.from_masks(r, n, edges)
        if not problem.admits_codegree(min_positive_codegree(h)):
            return False
        if triangle and contains_generalized_triangle(h) is not None:
            return False
        for pat in explicit:
            if find_embedding(h, pat) is not None:
                return False
        if problem.require_not_r_partite and find_r_partition(h) is not None:
            return False
        return True

    def apply(pos: int, choice: int) -> bool:
        feasible = True
        em = slots[pos]
        if choice == 1:
            if tracker is not None:
                created = tracker.would_create(em)
                if prune_forbidden and created:
                    feasible = False
                tracker.add(em)
            edges.append(em)
            for sid in slot_subs[pos]:
                was_zero = cnt[sid] == 0
                cnt[sid] += 1
                rem[sid] -= 1
                if prune_codegree and was_zero and cnt[sid] + rem[sid] < minreq:
                    feasible = False
            if feasible and prune_forbidden and explicit:
                h = Hypergraph.from_masks(r, n, edges)
                for pat in explicit:
                    if find_embedding(h, pat) is not None:
                        feasible = False
                        break
        else:
            for sid in slot_subs[pos]:
                rem[sid] -= 1
                if prune_codegree and cnt[sid] != 0 and cnt[sid] + rem[sid] < minreq:
                    feasible = False
        return feasible

    def undo(pos: int, choice: int) -> None:
        em = slots[pos]
        if choice == 1:
            edges.pop()
            if tracker is not None:
                tracker.remove(em)
            for sid in slot_subs[pos]:
                cnt[sid] -= 1
                rem[sid] += 1
        else:
            for sid in slot_subs[pos]:
                rem[sid] += 1

    pos = 0
    going_down = True
    while True:
        if going_down:
            if pos == nslots:
                if leaf_ok():
                    solutions += 1
                    if len(witnesses) < stored_cap:
                        witnesses.append(tuple(edges))
                    else:
                        overflow = True
                going_down = False
                pos -= 1
                if pos < 0:
                    break
                continue
            choice = 1
        else:
            applied = taken[pos]
            undo(pos, applied)
            if applied == 1:
                choice = 0
            else:
                taken[pos] = -1
                pos -= 1
                if pos < 0:
                    break
                continue
        nodes += 1
        if nodes >= node_budget or (
            deadline is not None and nodes % 2048 == 0 and time.monotonic() > deadline
        ):
            budget_hit = True
            break
        taken[pos] = choice
        if apply(pos, choice):
            pos += 1
            going_down = True
        else:
            going_down = False

    return {
        "nodes": nodes,
        "solutions": solutions,
        "witnesses": witnesses,
        "budget_hit": budget_hit,
        "overflow": overflow,
    }


# ---------------------------------------------------------------------------
# orchestration
# ---------------------------------------------------------------------------


def enumerate_hypergraphs(
    problem: SearchProblem,
    visitor=None,
    workers: int = 1,
    *,
    prune_forbidden: bool = True,
    prune_codegree: bool = True,
    use_numba: bool | None = None,
) -> SearchReport:
    """Enumerate all solutions of ``problem``.

    ``visitor`` is called once per labeled solution, in a deterministic
    order independent of worker count.  The returned witness list holds one
    canonical representative per isomorphism class.
    """
    start = time.monotonic()
    minreq, triangle, explicit = _normalize(problem)
    budget = problem.budget
    deadline = start + budget.max_seconds if budget.max_seconds is not None else None
    kernel_path = problem.r == 3 and not explicit

    labeled: list[tuple[int, ...]] = []
    nodes = 0
    solutions = 0
    budget_hit = False
    overflow = False
    early_stop = False

    if kernel_path:
        nslots = comb(problem.n, 3)
        depth = 0
        if (workers > 1 or deadline is not None or budget.max_witnesses is not None) and nslots > CHUNK_DEPTH:
            depth = CHUNK_DEPTH
        prefixes = list(product((1, 0), repeat=depth))
        seq = workers <= 1 or budget.max_witnesses is not None

        def run_chunk(prefix, node_allowance):
            return kernels.run_triangle_search(
                problem.n,
                minreq,
                triangle,
                problem.require_not_r_partite,
                node_allowance,
                prefix=prefix,
                prune_forbidden=prune_forbidden,
                prune_codegree=prune_codegree,
                max_witnesses=budget.max_stored_witnesses,
                use_numba=use_numba,
            )

        results = []
        if seq:
            remaining = budget.max_nodes
            for prefix in prefixes:
                if remaining <= 0 or (deadline is not None and time.monotonic() > deadline):
                    budget_hit = True
                    break
                res = run_chunk(prefix, remaining)
                results.append(res)
                remaining -= res["nodes"]
                if budget.max_witnesses is not None:
                    got = sum(r_["solutions"] for r_ in results)
                    if got >= budget.max_witnesses:
                        early_stop = True
                        break
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(
                    pool.map(lambda p: run_chunk(p, budget.max_nodes), prefixes)
                )
            if deadline is not None and time.monotonic() > deadline:
                budget_hit = True
        for res in results:
            nodes += res["nodes"]
            solutions += res["solutions"]
            budget_hit = budget_hit or res["budget_hit"]
            overflow = overflow or res["overflow"]
            for masks in res["witnesses"]:
                if len(labeled) < budget.max_stored_witnesses:
                    labeled.append(masks)
                else:
                    overflow = True
    else:
        res = _python_search(
            problem,
            minreq,
            triangle,
            explicit,
            prune_forbidden,
            prune_codegree,
            budget.max_nodes,
            deadline,
            budget.max_stored_witnesses,
        )
        nodes = res["nodes"]
        solutions = res["solutions"]
        budget_hit = res["budget_hit"]
        overflow = res["overflow"]
        labeled = res["witnesses"]
        if budget.max_witnesses is not None and solutions >= budget.max_witnesses:
            early_stop = True

    classes: dict[str, Hypergraph] = {}
    for masks in labeled:
        h = Hypergraph.from_masks(problem.r, problem.n, masks)
        _check_solution(problem, h, triangle, explicit)
        if visitor is not None:
            visitor(h)
        cf = canonical_form(h)
        classes.setdefault(cf.key, cf.representative)

    complete = not (budget_hit or overflow or early_stop)
    return SearchReport(
        status=EXHAUSTIVE_COMPLETE if complete else BUDGET_EXHAUSTED,
        nodes_explored=nodes,
        labeled_solutions=solutions,
        witnesses=tuple(
            Witness(key, rep) for key, rep in sorted(classes.items())
        ),
        elapsed_seconds=time.monotonic() - start,
        problem=problem,
    )


def _check_solution(problem, h, triangle, explicit) -> None:
    """Re-verify an emitted witness through the public modules."""
    delta = min_positive_codegree(h)
    ok = (
        h.m > 0
        and problem.admits_codegree(delta)
        and (not triangle or contains_generalized_triangle(h) is None)
        and all(find_embedding(h, pat) is None for pat in explicit)
        and (not problem.require_not_r_partite or find_r_partition(h) is None)
    )
    if not ok:
        raise RuntimeError(
            f"engine emitted an invalid witness {h!r} for {problem!r}"
        )


def find_counterexamples(
    r: int,
    n: int,
    budget: SearchBudget | None = None,
    workers: int = 1,
    use_numba: bool | None = None,
) -> SearchReport:
    """Search for triangle-free, non-r-partite r-graphs whose minimum
    positive codegree strictly exceeds 2n/(2r+1).

    An empty exhaustive-complete report confirms the partiteness theorem at
    this scale; nonempty reports below 2n >= (r-1)(2r+1) reproduce the
    small-n constructions.
    """
    problem = SearchProblem(
        r=r,
        n=n,
        threshold=Threshold.codegree_bound(r, n),
        forbidden=(TRIANGLE,),
        require_not_r_partite=True,
        budget=budget or SearchBudget(),
    )
    return enumerate_hypergraphs(problem, workers=workers, use_numba=use_numba)


@dataclass(frozen=True)
class CoexResult:
    """Extremal codegree value with a witness, or an honest bracket."""

    value: int | None
    witness: Hypergraph | None
    lower: int
    upper: int
    exact: bool

    def to_json_dict(self) -> dict:
        from .core import format_hg

        return {
            "value": self.value,
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
            "witness": format_hg(self.witness) if self.witness else None,
        }


def copositive_turan(
    r: int,
    n: int,
    budget: SearchBudget | None = None,
    workers: int = 1,
    use_numba: bool | None = None,
) -> CoexResult:
    """Exact maximum of the minimum positive codegree over nonempty
    triangle-free r-graphs on n vertices.

    Tests feasibility of codegree >= k for k from n-r+1 downward and stops
    at the first satisfiable level; the levels above must then have been
    refuted by exhaustive-complete empty runs for the value to be exact.
    """
    base = budget or SearchBudget()
    kmax = n - (r - 1)
    upper = kmax
    for k in range(kmax, 0, -1):
        problem = SearchProblem(
            r=r,
            n=n,
            threshold=k,
            forbidden=(TRIANGLE,),
            require_not_r_partite=False,
            budget=SearchBudget(
                max_nodes=base.max_nodes,
                max_seconds=base.max_seconds,
                max_witnesses=1,
                max_stored_witnesses=base.max_stored_witnesses,
            ),
        )
        report = enumerate_hypergraphs(problem, workers=1, use_numba=use_numba)
        if report.witnesses:
            exact = upper == k
            return CoexResult(
                value=k if exact else None,
                witness=report.witnesses[0].hypergraph,
                lower=k,
                upper=upper,
                exact=exact,
            )
        if report.status != EXHAUSTIVE_COMPLETE:
            return CoexResult(value=None, witness=None, lower=0, upper=k, exact=False)
        upper = k - 1
    return CoexResult(value=0, witness=None, lower=0, upper=0, exact=True)


def random_pattern_free(
    r: int,
    n: int,
    target_edges: int,
    forbidden=(TRIANGLE,),
    seed: int = 0,
) -> Hypergraph:
    """Greedy randomized pattern-free hypergraph, deterministic per seed.

    Candidate edges are shuffled once; each is kept unless it would create a
    forbidden pattern.  May return fewer than ``target_edges`` edges when
    the process saturates.
    """
    if r < 3:
        raise ValueError(f"need r >= 3, got {r}")
    if n > MAX_SEARCH_VERTICES:
        raise CapacityError(f"supports n <= {MAX_SEARCH_VERTICES}, got {n}")
    triangle = TRIANGLE in forbidden
    explicit = []
    for entry in forbidden:
        if entry == TRIANGLE:
            continue
        if isinstance(entry, tuple) and entry and entry[0] == "expansion":
            pattern = expansion_of_clique(r, int(entry[1]))
        elif isinstance(entry, Hypergraph):
            pattern = entry
        else:
            raise ValueError(f"unrecognized forbidden entry {entry!r}")
        if pattern.n <= n:
            explicit.append(pattern)
    rng = random.Random(seed)
    slots = sorted(mask_of(c) for c in combinations(range(n), r))
    rng.shuffle(slots)
    tracker = _TriangleTracker(r, n) if triangle else None
    edges: list[int] = []
    for em in slots:
        if len(edges) >= target_edges:
            break
        if tracker is not None and tracker.would_create(em):
            continue
        if explicit:
            h = Hypergraph.from_masks(r, n, edges + [em])
            if any(find_embedding(h, pat) is not None for pat in explicit):
                continue
        if tracker is not None:
            tracker.add(em)
        edges.append(em)
    return Hypergraph.from_masks(r, n, edges)


# ---------------------------------------------------------------------------
# theorem verification sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationRow:
    n: int
    status: str
    witness_classes: int
    prediction: str | None
    agrees: bool | None
    property_only: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "status": self.status,
            "witness_classes": self.witness_classes,
            "prediction": self.prediction or "none",
            "agrees": self.agrees,
            "property_only": self.property_only,
        }


@dataclass(frozen=True)
class TheoremVerification:
    r: int
    mode: str
    ell: int | None
    rows: tuple[VerificationRow, ...]

    @property
    def overall_pass(self) -> bool:
        return all(
            row.agrees is True
            for row in self.rows
            if row.prediction is not None
        ) and all(row.status == EXHAUSTIVE_COMPLETE for row in self.rows)

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "mode": self.mode,
            "ell": self.ell,
            "rows": [row.to_json_dict() for row in self.rows],
            "overall_pass": self.overall_pass,
        }


def predicted_counterexamples(r: int, n: int) -> str:
    """Expected outcome of :func:`find_counterexamples` at (r, n).

    Counterexamples exist exactly for r+1 <= n below the tight scale
    (2n < (r-1)(2r+1)): small complete r-graphs padded with isolated
    vertices beat the threshold without being r-partite.  From the tight
    scale upward, and trivially for n <= r, none exist.
    """
    if n <= r:
        return "empty"
    if 2 * n < (r - 1) * (2 * r + 1):
        return "nonempty"
    return "empty"


def verify_theorem_suite(
    r: int,
    n_from: int,
    n_to: int,
    mode: str = "triangle",
    ell: int | None = None,
    budget: SearchBudget | None = None,
    workers: int = 1,
    use_numba: bool | None = None,
) -> TheoremVerification:
    """Run counterexample searches over a range of n and compare each
    outcome against the predicted status.

    In expansion mode the admissible scale starts at
    2n >= (2r+1)(r-2)C(ell,2); below it no prediction is made and the row
    is marked property-only, never as a refutation.
    """
    if mode not in ("triangle", "expansion"):
        raise ValueError(f"mode must be 'triangle' or 'expansion', got {mode!r}")
    if mode == "expansion":
        if ell is None:
            raise ValueError("expansion mode needs ell")
        forbidden = (("expansion", ell),)
    else:
        forbidden = (TRIANGLE,)
    rows = []
    for n in range(n_from, n_to + 1):
        problem = SearchProblem(
            r=r,
            n=n,
            threshold=Threshold.codegree_bound(r, n),
            forbidden=forbidden,
            require_not_r_partite=True,
            budget=budget or SearchBudget(),
        )
        report = enumerate_hypergraphs(problem, workers=workers, use_numba=use_numba)
        if mode == "triangle":
            prediction = predicted_counterexamples(r, n)
            property_only = False
        else:
            admissible = 2 * n >= (2 * r + 1) * (r - 2) * comb(ell, 2)
            prediction = "empty" if admissible else None
            property_only = not admissible
        if prediction is None or report.status != EXHAUSTIVE_COMPLETE:
            agrees = None
        else:
            agrees = (len(report.witnesses) > 0) == (prediction == "nonempty")
        rows.append(
            VerificationRow(
                n=n,
                status=report.status,
                witness_classes=len(report.witnesses),
                prediction=prediction,
                agrees=agrees,
                property_only=property_only,
            )
        )
    return TheoremVerification(r=r, mode=mode, ell=ell, rows=tuple(rows))
