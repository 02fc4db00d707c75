"""Exception types shared across the package."""

from __future__ import annotations

from typing import Any


class DomainError(ValueError):
    """Parameters fall outside the range where a quantity is defined."""


class PreconditionError(ValueError):
    """An input graph does not meet the stated hypothesis of an operation."""


class HypothesisViolation(PreconditionError):
    """A named clause of a structural hypothesis fails.

    ``clause`` is a short label such as ``"(b)"`` and ``detail`` gives a
    concrete offending object when one is available.
    """

    def __init__(self, clause: str, detail: str = "") -> None:
        self.clause = clause
        self.detail = detail
        super().__init__(f"hypothesis {clause} violated" + (f": {detail}" if detail else ""))


class ExtensionFailure(RuntimeError):
    """A greedy extension step found no admissible vertex.

    Under verified hypotheses this signals a bug, never a property of the input.
    """

    def __init__(self, step: str, clique: tuple[int, ...]) -> None:
        self.step = step
        self.clique = clique
        super().__init__(f"no extension for clique {clique} at step {step}")


class InsertionFailure(RuntimeError):
    """No system of distinct representatives exists for a step-up insertion."""

    def __init__(self, block: int, message: str = "") -> None:
        self.block = block
        super().__init__(message or f"block {block} has no available insertion vertex")


class BudgetExceeded(RuntimeError):
    """An exact search hit its node budget; ``best`` is the best witness found."""

    def __init__(self, best: Any = None, nodes: int = 0) -> None:
        self.best = best
        self.nodes = nodes
        super().__init__(f"search budget exhausted after {nodes} nodes")


class ResourceLimit(RuntimeError):
    """Enumeration would exceed a configured size limit."""
