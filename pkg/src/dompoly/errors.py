"""Exception types shared across the library."""

from __future__ import annotations


class CapacityError(ValueError):
    """A requested construction exceeds a documented size cap."""


class EdgeListParseError(ValueError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class NonConvergenceError(RuntimeError):
    """Root iteration failed to converge; carries the best iterate seen."""

    def __init__(self, message: str, roots=(), max_correction: float = float("inf")) -> None:
        super().__init__(message)
        self.roots = tuple(roots)
        self.max_correction = max_correction


class OracleMismatchError(RuntimeError):
    """Closed form and brute-force enumeration disagree; an integrity failure."""
