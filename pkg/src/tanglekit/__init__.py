"""Exact diagram calculus for Temperley-Lieb, blob, and type B/D Temperley-Lieb algebras."""

from .algebra import (
    AdmissibilityClass,
    AlgebraKind,
    Variant,
    classify,
    count_by_class,
    enumerate_basis,
    reduce,
    reduce_by_rules,
)
from .correspondences import (
    from_symmetric,
    to_symmetric,
    verify_counts,
    verify_embedding,
    verify_presentation,
    verify_symmetric,
)
from .element import Element, GeneratorWord, evaluate_word, span_reachability, structure_constants
from .errors import TangleKitError
from .report import VerificationReport
from .scalar import Scalar
from .tables import load_table, persist_table
from .tangle import DecoratedTangle, concatenate, enumerate_matchings, make_tangle, parse_tangle, toggle_nw
from .words import line_crossing_length, rewrite_b, rewrite_d, shortest_word_oracle

__all__ = [
    "AdmissibilityClass", "AlgebraKind", "DecoratedTangle", "Element", "GeneratorWord", "Scalar",
    "TangleKitError", "Variant", "VerificationReport", "classify", "concatenate", "count_by_class",
    "enumerate_basis", "enumerate_matchings", "evaluate_word", "from_symmetric", "line_crossing_length",
    "load_table", "make_tangle", "parse_tangle", "persist_table", "reduce", "reduce_by_rules",
    "rewrite_b", "rewrite_d", "shortest_word_oracle", "span_reachability", "structure_constants",
    "to_symmetric", "toggle_nw", "verify_counts", "verify_embedding", "verify_presentation",
    "verify_symmetric",
]
