"""Exception hierarchy shared by all modules.

The CLI maps each class to a fixed exit code, so new failure modes should
subclass one of these rather than raising bare ``ValueError``.
"""

from __future__ import annotations

from typing import Any


class IncColorError(Exception):
    """Base class for every error raised by this package."""


class GraphParseError(IncColorError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GenerationError(IncColorError):
    """A generator request was malformed or could not be satisfied within its retry budget."""


class MalformedColoringError(IncColorError):
    """A coloring document is structurally invalid (missing incidences, colors out of range)."""


class HypothesisViolation(IncColorError):
    """The input graph does not satisfy the preconditions of the requested theorem.

    ``witness`` carries evidence: a densest vertex set for a mad bound, or a
    core vertex set for a degeneracy bound.
    """

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class InternalContradiction(IncColorError):
    """A proven guarantee failed: peeling stalled or a local repair was exhausted.

    ``artifact`` is a JSON-serializable dict describing the offending state
    so that it can be written to disk and inspected.
    """

    def __init__(self, message: str, artifact: dict | None = None) -> None:
        super().__init__(message)
        self.artifact = artifact or {}


class PeelStalled(InternalContradiction):
    pass


class ExtensionExhausted(InternalContradiction):
    pass


class SearchInconclusive(IncColorError):
    """Exact search hit its node limit before deciding."""

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None,
                 nodes: int = 0) -> None:
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


class InstanceTooLarge(IncColorError):
    pass
