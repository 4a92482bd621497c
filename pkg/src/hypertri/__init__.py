"""hypertri: exact tooling for r-uniform hypergraphs.

Degree/shadow/codegree primitives, forbidden-configuration detection,
strong colorings, generators for the extremal families, and a pruned
exhaustive search engine with canonical-form witness reporting.
"""

from .canonical import CanonicalForm, canonical_form
from .constructions import (
    BlowupSpec,
    balanced_r_partite,
    blowup,
    clique_plus_isolated,
    complete,
    expansion_of_clique,
    generalized_triangle,
    wheel5,
    wheel5_blowup,
)
from .core import (
    Hypergraph,
    ShadowIndex,
    Threshold,
    VertexSet,
    degree_of_set,
    degree_stats,
    format_hg,
    is_independent,
    ith_shadow,
    link_of_set,
    load_hg,
    min_positive_codegree,
    min_positive_idegree,
    neighborhood_of_vertex,
    parse_hg,
    save_hg,
    shadow,
)
from .errors import CapacityError, HgParseError
from .partition import PartitionCertificate, find_r_partition, verify_partition
from .patterns import (
    Embedding,
    SigmaWitness,
    contains_clique_in_ith_shadow,
    contains_expansion,
    contains_generalized_triangle,
    contains_sigma,
    find_embedding,
    verify_embedding,
)
from .search import (
    BUDGET_EXHAUSTED,
    EXHAUSTIVE_COMPLETE,
    TRIANGLE,
    CoexResult,
    SearchBudget,
    SearchProblem,
    SearchReport,
    TheoremVerification,
    VerificationRow,
    Witness,
    copositive_turan,
    enumerate_hypergraphs,
    find_counterexamples,
    random_pattern_free,
    verify_theorem_suite,
)

__version__ = "0.1.0"
