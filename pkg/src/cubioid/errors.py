"""Exception types shared across the package."""


class CubioidError(Exception):
    """Base class for all package errors."""


class NotFoundError(CubioidError):
    """A bounded search ended without a result; the bound was too small."""


class BoundExceededError(CubioidError):
    """A requested bound lies above the built-in time/memory guard."""


class WrongTypeError(CubioidError):
    """The operation is undefined for a gap of this type."""


class NotAVertexError(CubioidError):
    """The angle is not a vertex of the gap (its orbit leaves the long arc)."""


class NotAnOrbitError(CubioidError):
    """The input set is not closed under the circle map."""


class NotEscapingError(CubioidError):
    """The point did not escape within the iteration budget."""


class NumericalStallError(CubioidError):
    """An iterative numerical procedure failed to converge."""


class IllConditionedError(CubioidError):
    """Root refinement failed to reach the requested residual."""


class UndeterminedError(CubioidError):
    """Escape-rate tie: the free critical point cannot be designated."""


class RayCrashedError(CubioidError):
    """A traced ray crashed at an escaping (pre)critical point."""

    def __init__(self, near: complex, message: str = ""):
        self.near = near
        super().__init__(message or f"ray crashed near {near}")
