"""
Exception hierarchy for the nullsatz toolkit.

Every error raised on purpose by the library derives from ``NullsatzError``.
Each class also subclasses the closest builtin so callers catching
``ValueError`` or ``ArithmeticError`` keep working.
"""

from typing import Optional


class NullsatzError(Exception):
    """Base class for all library errors."""


class PolynomialParseError(NullsatzError, ValueError):
    """Malformed polynomial text or input file."""

    def __init__(self, message: str, position: int = 0, line: Optional[int] = None):
        self.position = position
        self.line = line
        where = f"line {line}, " if line is not None else ""
        super().__init__(f"{message} ({where}position {position})")
        self.detail = message


class UnknownVariableError(NullsatzError, ValueError):
    """An identifier that is not part of the variable context."""


class ContextMismatchError(NullsatzError, ValueError):
    """Polynomials from different variable contexts were combined."""


class ZeroPolynomialError(NullsatzError, ValueError):
    """An operation that needs a nonzero polynomial received zero."""


class NotDivisibleError(NullsatzError, ArithmeticError):
    """Exact polynomial division left a remainder."""


class SingularMatrixError(NullsatzError, ArithmeticError):
    """A coordinate change matrix has zero determinant."""


class FormalDegreeError(NullsatzError, ValueError):
    """Formal degrees are smaller than the true degrees, or both are zero."""


class DegenerateRelationError(NullsatzError, ArithmeticError):
    """The resultant vanished and no nontrivial cofactor pair was found."""


class NoVariablePresentError(NullsatzError, ValueError):
    """No generator involves the variable that should be eliminated."""


class RetryExhaustedError(NullsatzError, RuntimeError):
    """Every seeded linear change up to the retry cap was degenerate."""


class NonHomogeneousError(NullsatzError, ValueError):
    """A homogeneous ideal was required."""


class LengthMismatchError(NullsatzError, ValueError):
    """Cofactor list and generator list have different lengths."""


class SizeLimitError(NullsatzError, RuntimeError):
    """An instance exceeds a configured size guard."""


class UnsupportedInputError(NullsatzError, ValueError):
    """The input is valid but outside what the procedure can decide."""


class CertificateSchemaError(NullsatzError, ValueError):
    """A certificate document does not match the expected schema."""
