"""Edge-length multiset realizations on complete graphs.

Decides and constructs Hamiltonian-path realizations of edge-length
multisets (complete constructive coverage for lists over {1, 2, 3, 5}),
verifies constructions against an independent exhaustive searcher, and
lifts realizations to cyclic decompositions of Cayley multigraphs on Z_v.
"""

from .cayley import (
    CayleyMultigraph,
    build_from_list,
    difference_list,
    verify_decomposition,
)
from .compose import compose, extend_with_ones, ones_path, translate
from .conditions import ConditionReport, condition_one, condition_two, residue_components
from .families import (
    AffineExpr,
    Catalog,
    FamilyTemplate,
    Run,
    load_catalog,
    staircase,
)
from .model import (
    EdgeLengthList,
    PathRealization,
    ValidationReport,
    cyclic_lengths,
    edge_length,
    is_perfect,
    linear_lengths,
    validate,
)
from .oracle import (
    DEFAULT_BUDGET,
    SearchOutcome,
    count_realizations,
    search,
    sweep_conjecture,
)
from .solver import (
    Realizability,
    RealizabilityVerdict,
    construct_cyclic,
    construct_linear,
    decide_bhr,
    decide_linear,
    decide_linear_123,
    replay,
)

__version__ = "0.1.0"

__all__ = [
    "AffineExpr",
    "Catalog",
    "CayleyMultigraph",
    "ConditionReport",
    "DEFAULT_BUDGET",
    "EdgeLengthList",
    "FamilyTemplate",
    "PathRealization",
    "Realizability",
    "RealizabilityVerdict",
    "Run",
    "SearchOutcome",
    "ValidationReport",
    "build_from_list",
    "compose",
    "condition_one",
    "condition_two",
    "construct_cyclic",
    "construct_linear",
    "count_realizations",
    "cyclic_lengths",
    "decide_bhr",
    "decide_linear",
    "decide_linear_123",
    "difference_list",
    "edge_length",
    "extend_with_ones",
    "is_perfect",
    "linear_lengths",
    "load_catalog",
    "ones_path",
    "replay",
    "residue_components",
    "search",
    "staircase",
    "sweep_conjecture",
    "translate",
    "validate",
    "verify_decomposition",
]
