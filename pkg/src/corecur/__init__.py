"""Structured recursion from divide/combine/rank triples.

The engine computes the function a recursion defines: split the input with
a divide step, recurse on the parts, fold back with a combine step, and
check at every expansion that a well-founded rank strictly decreases, so
non-terminating specifications fail fast instead of looping.

Shipped on top of the engine: quicksort and mergesort with after-the-fact
correctness checkers, the extended Euclidean algorithm with self-certifying
output, CYK recognition with a brute-force oracle, the hydra game, and a
finite-graph termination toolkit (ranking functions, minimal ranks,
disjunctive well-foundedness).
"""

from .engine import (
    DEFAULT_FUSE,
    Algebra,
    CallTrace,
    Node,
    RankedCoalgebra,
    SolveConfig,
    TraceNode,
    guard,
    solve,
)
from .errors import (
    ArityMismatch,
    CorecurError,
    CycleFound,
    DomainMismatch,
    FuseExceeded,
    GrammarError,
    GraphFormatError,
    NotALeaf,
    OracleBoundExceeded,
    RankViolation,
    RootOnly,
    StrategyExhausted,
    UnknownTerminal,
)
from .graph import (
    FiniteGraph,
    canonical_graph,
    derive_min_rank,
    disjunctive_wf,
    format_graph,
    is_well_founded,
    parse_graph,
    parse_ranking,
    transitive_closure,
    verify_ranking,
)
from .orders import EvZeroSeq, Nat, Rank, SecondOfPair, check_descent, less

__all__ = [
    "Algebra",
    "ArityMismatch",
    "CallTrace",
    "CorecurError",
    "CycleFound",
    "DEFAULT_FUSE",
    "DomainMismatch",
    "EvZeroSeq",
    "FiniteGraph",
    "FuseExceeded",
    "GrammarError",
    "GraphFormatError",
    "Nat",
    "Node",
    "NotALeaf",
    "OracleBoundExceeded",
    "Rank",
    "RankViolation",
    "RankedCoalgebra",
    "RootOnly",
    "SecondOfPair",
    "SolveConfig",
    "StrategyExhausted",
    "TraceNode",
    "UnknownTerminal",
    "canonical_graph",
    "check_descent",
    "derive_min_rank",
    "disjunctive_wf",
    "format_graph",
    "guard",
    "is_well_founded",
    "less",
    "parse_graph",
    "parse_ranking",
    "solve",
    "transitive_closure",
    "verify_ranking",
]
