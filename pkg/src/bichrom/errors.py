"""Exception hierarchy. Every error carries a stable ``code`` string."""

from __future__ import annotations


class BichromError(Exception):
    code = "ERROR"


class DomainError(BichromError, ValueError):
    """Input outside the range on which a method is defined."""

    code = "DOMAIN"


class CycleTooSmall(DomainError):
    code = "CYCLE_TOO_SMALL"


class DegeneratePoint(DomainError):
    code = "DEGENERATE_POINT"


class InvalidPoint(BichromError, ValueError):
    code = "INVALID_POINT"


class GraphError(BichromError, ValueError):
    code = "GRAPH_ERROR"


class EdgeNotPresent(GraphError):
    code = "EDGE_NOT_PRESENT"


class GraphParseError(GraphError):
    """Raised by the edge-list reader; ``code`` is set per instance."""

    code = "PARSE_ERROR"

    def __init__(self, message: str, code: str = "PARSE_ERROR", line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.code = code
        self.line = line


class QuadFieldError(BichromError, ArithmeticError):
    code = "QUADFIELD_ERROR"


class DiscriminantMismatch(QuadFieldError):
    code = "DISCRIMINANT_MISMATCH"


class NotInvertible(QuadFieldError, ZeroDivisionError):
    code = "NOT_INVERTIBLE"


class NotAnInteger(QuadFieldError):
    code = "NOT_AN_INTEGER"


class IntegralityViolation(BichromError, ArithmeticError):
    code = "INTEGRALITY_VIOLATION"


class RouteMismatch(BichromError, ArithmeticError):
    """Two internal computation routes for the same quantity disagreed."""

    code = "ROUTE_MISMATCH"


class BudgetExhausted(BichromError, RuntimeError):
    code = "BUDGET_EXHAUSTED"


class MethodUnavailable(BichromError, ValueError):
    """The requested method does not apply to the requested input kind."""

    code = "METHOD_UNAVAILABLE"
