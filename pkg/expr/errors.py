"""Exception hierarchy shared by every crcartan package."""

from __future__ import annotations

from typing import Any, Optional


class CrCartanError(Exception):
    """Base class for all crcartan errors."""


class ExprError(CrCartanError):
    """Problems building or manipulating expressions."""


class ParseError(ExprError):
    """Syntax error in the expression DSL, with a 0-based character position."""

    def __init__(self, message: str, position: int, text: str = "") -> None:
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")

    def pointer(self) -> str:
        """Two-line rendering of the text with a caret under the error."""
        return f"{self.text}\n{' ' * self.position}^"


class UnknownIdentifier(ParseError):
    """An identifier outside the DSL variable set."""


class EvaluationError(ExprError):
    """Evaluation could not produce a value."""


class MissingAssignment(EvaluationError):
    def __init__(self, variable: str) -> None:
        self.variable = variable
        super().__init__(f"no value assigned to {variable}")


class DivisionByZero(EvaluationError):
    """A negative power of a subtree that evaluates to zero."""

    def __init__(self, subtree: Any, detail: str = "") -> None:
        self.subtree = subtree
        text = detail or str(subtree)
        super().__init__(f"division by zero in subtree {text}")


class NotPolynomial(ExprError):
    """Polynomial conversion met a negative power."""


class SamplingExhausted(CrCartanError):
    def __init__(self, requested: int, accepted: int, rejected: int) -> None:
        self.requested = requested
        self.accepted = accepted
        self.rejected = rejected
        super().__init__(
            f"sampling exhausted: {accepted}/{requested} points accepted "
            f"after {rejected} rejections"
        )


class SingularFrame(CrCartanError):
    """A frame whose coefficient matrix is singular where it was needed."""


class HypersurfaceValidationError(CrCartanError):
    def __init__(self, report: Any, message: Optional[str] = None) -> None:
        self.report = report
        super().__init__(message or f"hypersurface rejected: {', '.join(report.failed())}")


class RigidMapError(CrCartanError):
    """Rigid map data with a non-real or zero scale, or foreign variables."""


class FlowDomainError(CrCartanError):
    """A flow closed form is singular at the requested point and time."""


class LieAlgebraError(CrCartanError):
    """Inconsistent Lie algebra data."""
