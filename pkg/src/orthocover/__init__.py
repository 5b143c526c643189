"""Orthogonal graph colourings and independent coverings."""

from orthocover.errors import (
    InvariantViolation,
    NotCoveringShaped,
    OrthoCoverError,
    PreconditionError,
    SearchInconclusive,
)
from orthocover.graph import (
    Covering,
    Graph,
    GraphStats,
    OrthogonalColouring,
    Partition,
    are_orthogonal,
    colouring_to_covering,
    covering_to_colouring,
    is_independent_covering,
    is_independent_set,
    is_independent_transversal,
    is_proper,
    is_valid_orthogonal_colouring,
    stats,
)
from orthocover.search import (
    SearchBudget,
    SearchOutcome,
    Status,
    find_independent_covering,
    find_orthogonal_colouring,
    ochi,
    perfect_orthogonal_check,
)

__all__ = [
    "Covering", "Graph", "GraphStats", "InvariantViolation", "NotCoveringShaped",
    "OrthoCoverError", "OrthogonalColouring", "Partition", "PreconditionError",
    "SearchBudget", "SearchInconclusive", "SearchOutcome", "Status", "are_orthogonal",
    "colouring_to_covering", "covering_to_colouring", "find_independent_covering",
    "find_orthogonal_colouring", "is_independent_covering", "is_independent_set",
    "is_independent_transversal", "is_proper", "is_valid_orthogonal_colouring", "ochi",
    "perfect_orthogonal_check", "stats",
]
