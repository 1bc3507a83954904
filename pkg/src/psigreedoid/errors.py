"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GraphError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(GraphError, ValueError):
    """An exhaustive routine was asked to run beyond its vertex cap."""


class ContractViolation(GraphError, ValueError):
    """An argument breaks the documented precondition of an operation
    (e.g. a non-stable set handed to a stable-set predicate)."""


class PreconditionError(GraphError):
    """A fast decider was applied to a graph outside the class it is valid for."""

    def __init__(self, method: str, reason: str):
        self.method = method
        self.reason = reason
        super().__init__(f"{method}: {reason}")


def check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapExceeded(f"{what} is capped at n <= {cap} (got n = {n})")
