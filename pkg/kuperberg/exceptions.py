"""
    Domain errors raised by the kuperberg app.

    Every error carries a human readable message plus keyword context values
    (witnesses, offending ids, positions) that are rendered by __str__.
"""

from typing import Any


class KuperbergError(Exception):
    """
        Base class of every error raised while computing with Hopf algebras,
        cocycles, Heegaard diagrams or invariants.
    """

    DEFAULT_MESSAGE = "Kuperberg computation failed."

    def __init__(self, message: str | None = None, **context: Any) -> None:
        self.message: str = message or self.DEFAULT_MESSAGE
        self.context: dict[str, Any] = context

        context_name: str
        context_value: Any
        for context_name, context_value in context.items():
            setattr(self, context_name, context_value)

        super().__init__(self.message)

    def __str__(self) -> str:
        """ Returns formatted message & context values of the error. """

        if not self.context:
            return self.message

        formatted_context: str = ", ".join(
            f"{context_name}={repr(context_value)}"
            for context_name, context_value in self.context.items()
        )
        return f"{self.message} ({formatted_context})"


class DivisionByZeroError(KuperbergError, ZeroDivisionError):
    DEFAULT_MESSAGE = "Cannot divide by zero in an exact field."


class FieldMismatchError(KuperbergError):
    DEFAULT_MESSAGE = "Operands belong to different fields."


class DimensionMismatchError(KuperbergError):
    DEFAULT_MESSAGE = "Structure tensors have inconsistent dimensions."


class SingularAntipodeError(KuperbergError):
    DEFAULT_MESSAGE = "The antipode matrix is not invertible."


class NotOneDimensionalError(KuperbergError):
    """
        The integral (or cointegral) space is not one dimensional, which
        signals a non-Hopf input or a degenerate field characteristic.
    """

    DEFAULT_MESSAGE = "The space of integrals is not one dimensional."


class NormalizationFailureError(KuperbergError):
    DEFAULT_MESSAGE = "The cointegral vanishes on the integral, so they cannot be normalized."


class NotHalfIntegerError(KuperbergError):
    DEFAULT_MESSAGE = "Value is not a half-integer."


class UnknownAlgebraError(KuperbergError):
    DEFAULT_MESSAGE = "No catalog algebra has that name."


class BadParamsError(KuperbergError):
    DEFAULT_MESSAGE = "Invalid parameters for catalog construction."


class NotInvertibleError(KuperbergError):
    DEFAULT_MESSAGE = "Element is not invertible."


class NotNormalizedError(KuperbergError):
    DEFAULT_MESSAGE = "Cocycle is not normalized by the counit."


class CocycleConditionError(KuperbergError):
    DEFAULT_MESSAGE = "The 2-cocycle condition fails."


class IdentityViolationError(KuperbergError):
    DEFAULT_MESSAGE = "An algebraic identity does not hold."


class ZeroEntryError(KuperbergError):
    DEFAULT_MESSAGE = "Bicharacter value must be nonzero."


class HopfFormatError(KuperbergError):
    DEFAULT_MESSAGE = "Malformed Hopf algebra or cocycle document."


class KhdSyntaxError(KuperbergError):
    """
        The .khd text could not be parsed. The line and column are 1-based and
        `expected` describes the token the parser was looking for.
    """

    DEFAULT_MESSAGE = "Syntax error in Heegaard diagram text."

    def __init__(self, message: str | None = None, *, line: int, column: int, expected: str) -> None:
        super().__init__(message, line=line, column=column, expected=expected)


class DuplicatePointIdError(KuperbergError):
    DEFAULT_MESSAGE = "Intersection point id is declared more than once."


class UnknownCurveRefError(KuperbergError):
    DEFAULT_MESSAGE = "Reference to a curve or point that is not declared."


class NonIntegralExponentError(KuperbergError):
    DEFAULT_MESSAGE = "Rotation data does not give an integral exponent."


class UnknownDiagramError(KuperbergError):
    DEFAULT_MESSAGE = "No builtin diagram has that name."


class PlanFailureError(KuperbergError):
    DEFAULT_MESSAGE = "No contraction step fits within the term budget."


class BudgetExceededError(KuperbergError):
    DEFAULT_MESSAGE = "Computation would exceed the configured term budget."
