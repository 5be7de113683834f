"""Pythagorean fuzzy graphs: value types, algebra, classification, and search."""

from .algebra import (
    cartesian_product,
    complement,
    complete_complement,
    compose_label,
    composition,
    join,
    strong_complement,
    union,
)
from .classify import (
    Classification,
    SumIdentityReport,
    classify,
    half_strong_construction,
    is_self_complementary,
    strong_sum_identity,
    sum_identity,
)
from .core import (
    DEFAULT_EPSILON,
    PFDegree,
    PFGraph,
    PairKey,
    ValidationReport,
    Violation,
    ZERO_DEGREE,
    degree_max_min,
    degree_min_max,
    degrees_close,
    graphs_close,
    hesitation,
    set_tolerance,
    tolerance,
    validate,
)
from .errors import (
    ConstraintViolation,
    DanglingEdge,
    DuplicateEdge,
    DuplicateVertex,
    JoinOverlap,
    LabelClash,
    MalformedDocument,
    NotComplete,
    NotStrong,
    PFGError,
    SearchCapExceeded,
    UnknownVertex,
)
from .generate import FAMILIES, GenConfig, generate
from .graph_io import FORMAT_VERSION, parse, render, to_dot
from .morphism import (
    DEFAULT_SEARCH_CAP,
    MorphismCheck,
    MorphismKind,
    MorphismReport,
    find_morphism,
    verify_morphism,
)

__version__ = "0.1.0"

__all__ = [
    "PFDegree",
    "PFGraph",
    "PairKey",
    "ValidationReport",
    "Violation",
    "ZERO_DEGREE",
    "validate",
    "hesitation",
    "degree_min_max",
    "degree_max_min",
    "degrees_close",
    "graphs_close",
    "tolerance",
    "set_tolerance",
    "DEFAULT_EPSILON",
    "cartesian_product",
    "composition",
    "union",
    "join",
    "complement",
    "strong_complement",
    "complete_complement",
    "compose_label",
    "Classification",
    "classify",
    "SumIdentityReport",
    "sum_identity",
    "strong_sum_identity",
    "is_self_complementary",
    "half_strong_construction",
    "MorphismKind",
    "MorphismReport",
    "MorphismCheck",
    "find_morphism",
    "verify_morphism",
    "DEFAULT_SEARCH_CAP",
    "GenConfig",
    "generate",
    "FAMILIES",
    "parse",
    "render",
    "to_dot",
    "FORMAT_VERSION",
    "PFGError",
    "ConstraintViolation",
    "LabelClash",
    "JoinOverlap",
    "NotStrong",
    "NotComplete",
    "SearchCapExceeded",
    "UnknownVertex",
    "MalformedDocument",
    "DuplicateVertex",
    "DuplicateEdge",
    "DanglingEdge",
    "__version__",
]
