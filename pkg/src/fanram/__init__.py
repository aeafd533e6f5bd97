"""Certification and exact-search toolkit for Ramsey and star-critical Ramsey
numbers of cliques, matchings, and generalized fans.

Graphs are immutable bitmask-adjacency structures capped at order 128; every
search is exact and deterministic, and every claimed coloring ships with a
re-checkable certificate.
"""

from .bounds import (
    BoundReport,
    GraphParams,
    Validity,
    burr_bound,
    chromatic_number,
    chromatic_surplus,
    closed_formula,
    formula_ids,
    graph_params,
    is_good,
    star_lower_bound,
    tau,
)
from .colorings import (
    Certificate,
    TwoColoring,
    burr_coloring,
    check_free,
    coloring_from_graphs,
    lemma27_construction,
    load_certificate,
    serialize_certificate,
    thm17_construction,
    verify_lemma24,
)
from .errors import (
    BadParam,
    BudgetExhausted,
    CorruptRecord,
    FanramError,
    MissingParam,
    OrderCap,
    ParseError,
    PreconditionViolated,
    RangeError,
    SamplingFailure,
    StructureNotFound,
    UnknownFormula,
)
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .graphs import (
    Graph,
    complement,
    complete,
    complete_multipartite,
    copies,
    degree_profile,
    disjoint_union,
    empty_graph,
    from_edges,
    generalized_fan,
    induced,
    is_connected,
    join,
    relabel,
    star_augmented,
)
from .io import load_coloring, save_coloring
from .patterns import (
    Clique,
    Copies,
    EmbeddingWitness,
    Explicit,
    Fan,
    Matching,
    clique_number,
    contains_clique,
    contains_copies,
    contains_fan,
    contains_target,
    copies_pattern,
    format_target,
    independence_number,
    kt_packing,
    max_matching,
    parse_target,
    pattern_graph,
    pattern_order,
    witness_valid,
)
from .search import (
    PackingReport,
    SearchConfig,
    SearchResult,
    SearchStats,
    exists_free_coloring,
    packing_property_check,
    ramsey_number,
    star_critical,
)

__version__ = "0.1.0"

__all__ = [
    "BadParam",
    "BoundReport",
    "BudgetExhausted",
    "Certificate",
    "Clique",
    "Copies",
    "CorruptRecord",
    "EmbeddingWitness",
    "Explicit",
    "Fan",
    "FanramError",
    "Graph",
    "GraphParams",
    "Matching",
    "MissingParam",
    "OrderCap",
    "PackingReport",
    "ParseError",
    "PreconditionViolated",
    "RangeError",
    "SamplingFailure",
    "SearchConfig",
    "SearchResult",
    "SearchStats",
    "StructureNotFound",
    "TwoColoring",
    "UnknownFormula",
    "Validity",
    "burr_bound",
    "burr_coloring",
    "check_free",
    "chromatic_number",
    "chromatic_surplus",
    "clique_number",
    "closed_formula",
    "coloring_from_graphs",
    "complement",
    "complete",
    "complete_multipartite",
    "contains_clique",
    "contains_copies",
    "contains_fan",
    "contains_target",
    "copies",
    "copies_pattern",
    "degree_profile",
    "disjoint_union",
    "empty_graph",
    "exists_free_coloring",
    "format_target",
    "formula_ids",
    "from_edges",
    "generalized_fan",
    "graph6_decode",
    "graph6_encode",
    "graph_params",
    "independence_number",
    "induced",
    "is_connected",
    "is_good",
    "join",
    "kt_packing",
    "lemma27_construction",
    "load_certificate",
    "load_coloring",
    "max_matching",
    "packing_property_check",
    "parse_target",
    "pattern_graph",
    "pattern_order",
    "ramsey_number",
    "relabel",
    "save_coloring",
    "serialize_certificate",
    "star_augmented",
    "star_critical",
    "star_lower_bound",
    "tau",
    "thm17_construction",
    "verify_lemma24",
    "witness_valid",
    "__version__",
]
