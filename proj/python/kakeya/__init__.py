"""Kakeya line sets in the linear representation of a conic.

Thin wrapper over the C++ core: finite fields, the two small-set
constructions, exhaustive classification for small q, and the graph
censuses backing the size formulas.
"""

from ._core import (
    BudgetExceeded,
    Field,
    InvalidArgument,
    StructureError,
    classification_threshold,
    classify,
    construct_regulus_split,
    construct_secant_variant,
    gamma,
    graph_census,
    hanson_toft,
    main_lemma,
    make_field,
    mantel,
    recognize,
    secant_choice_count,
    set_size,
    size_via_cliques,
    sporadic_graph,
    verify,
)

__version__ = "1.0.0"

__all__ = [
    "BudgetExceeded",
    "Field",
    "InvalidArgument",
    "StructureError",
    "classification_threshold",
    "classify",
    "construct_regulus_split",
    "construct_secant_variant",
    "gamma",
    "graph_census",
    "hanson_toft",
    "main_lemma",
    "make_field",
    "mantel",
    "recognize",
    "secant_choice_count",
    "set_size",
    "size_via_cliques",
    "sporadic_graph",
    "verify",
]
