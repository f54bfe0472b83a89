"""Structured error types shared by all modules.

Every failure a computation can report is an ``InducedError`` carrying a
module-qualified code, so the CLI can emit a machine-readable object
instead of a traceback.
"""


class InducedError(Exception):
    """Base class for all inducedym errors."""

    code: str = "error"

    def __init__(self, message: str, module: str = "inducedym", code: str | None = None):
        super().__init__(message)
        self.message = message
        self.module = module
        if code is not None:
            self.code = code

    @property
    def qualified_code(self) -> str:
        return f"{self.module}.{self.code}"

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {
            "code": self.qualified_code,
            "module": self.module,
            "message": self.message,
        }


class InvalidInput(InducedError, ValueError):
    code = "invalid_input"


class BudgetExceeded(InducedError):
    code = "budget"


class PrecisionError(InducedError):
    code = "precision"


class TruncationError(InducedError):
    code = "truncation"


class QuadratureError(InducedError):
    code = "quadrature"


class HomologyObstruction(InducedError):
    code = "homology_obstruction"


class DisconnectedComplex(InducedError):
    code = "disconnected"


class DegreeMismatch(InducedError, ValueError):
    code = "degree_mismatch"


class DivergentMoments(InducedError):
    code = "divergent_moments"


class MixedWeightError(InducedError):
    code = "mixed_weight"


class IdentityViolation(InducedError):
    code = "identity_violation"
