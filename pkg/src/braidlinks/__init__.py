"""Exact braid words, Z-notation half twists, monodromy tables and closure invariants."""

from .braid import (
    BraidError,
    BraidWord,
    NormalForm,
    Permutation,
    concat,
    conjugate,
    equal,
    exponent_sum,
    free_reduce,
    inverse,
    markov_destabilize,
    normal_form,
    permutation_image,
    positive_conjugate,
    rotate,
)
from .halftwist import DoubledIndex, ExpressionError, ParseError, compile_chain, compile_z, doubled_strand
from .halftwist import compile as compile_expr
from .halftwist import evaluate, parse
from .laurent import LaurentPoly
from .links import (
    CableSpec,
    LinkSummary,
    cable,
    cable_many,
    closure_components,
    extract_component,
    identify,
    jones,
    kauffman_bracket,
    linking_matrix,
    summarize,
    torus_braid,
)
from .monodromy import (
    Configuration,
    DegenerationDiagram,
    Factorization,
    SingularityType,
    UnsupportedFeature,
    builtin,
    classify_k_points,
    full_twist,
    generic_line_factorization,
    lex_order_lines,
    lex_order_vertices,
    regenerate_node,
    regenerate_tangency,
    table_product,
    three_point_type1_factorization,
    three_point_type2_factorization,
    two_point_factorization,
)

__all__ = [
    "BraidError",
    "BraidWord",
    "CableSpec",
    "Configuration",
    "DegenerationDiagram",
    "DoubledIndex",
    "ExpressionError",
    "Factorization",
    "LaurentPoly",
    "LinkSummary",
    "NormalForm",
    "ParseError",
    "Permutation",
    "SingularityType",
    "UnsupportedFeature",
    "builtin",
    "cable",
    "cable_many",
    "classify_k_points",
    "closure_components",
    "compile_chain",
    "compile_expr",
    "compile_z",
    "concat",
    "conjugate",
    "doubled_strand",
    "equal",
    "evaluate",
    "exponent_sum",
    "extract_component",
    "free_reduce",
    "full_twist",
    "generic_line_factorization",
    "identify",
    "inverse",
    "jones",
    "kauffman_bracket",
    "lex_order_lines",
    "lex_order_vertices",
    "linking_matrix",
    "markov_destabilize",
    "normal_form",
    "parse",
    "permutation_image",
    "positive_conjugate",
    "regenerate_node",
    "regenerate_tangency",
    "rotate",
    "summarize",
    "table_product",
    "three_point_type1_factorization",
    "three_point_type2_factorization",
    "torus_braid",
    "two_point_factorization",
]
