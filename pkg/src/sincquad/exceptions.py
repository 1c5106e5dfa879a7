"""Exception hierarchy for sincquad."""


class SincError(ValueError):
    """Base class for all errors raised by sincquad."""


class DomainError(SincError):
    """An argument lies outside the domain of the requested operation."""


class UnsupportedTransformError(SincError):
    """The operation is not available for the requested transformation."""


class InvalidMeshError(SincError):
    """The mesh violates the side conditions required for a certified bound."""


class NonFiniteSampleError(SincError):
    """The integrand returned a non-finite value at a sample point."""

    def __init__(self, k, x, value):
        self.k = k
        self.x = x
        self.value = value
        super().__init__(f"integrand is not finite at k={k} (x={x!r}): got {value!r}")


class ToleranceUnreachableError(SincError):
    """No admissible n up to the search cap attains the requested tolerance."""
