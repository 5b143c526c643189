"""Exception types raised across the package."""

from __future__ import annotations


class OrthoCoverError(ValueError):
    """Invalid input to an operation (bad graph, partition, colouring, ...)."""


class NotCoveringShaped(OrthoCoverError):
    """An orthogonal colouring whose class sizes do not describe a covering."""


class PreconditionError(OrthoCoverError):
    """A construction was asked for outside the range where it is guaranteed."""


class SearchInconclusive(RuntimeError):
    """A budgeted search ran out of nodes before reaching a verdict."""

    def __init__(self, nodes_used: int, detail: str = "") -> None:
        self.nodes_used = nodes_used
        msg = f"search budget exhausted after {nodes_used} nodes"
        super().__init__(f"{msg} ({detail})" if detail else msg)


class InvariantViolation(AssertionError):
    """An internal invariant of a construction failed. Indicates a bug."""
