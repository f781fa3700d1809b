class KudlaToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class DiscriminantError(KudlaToolkitError, ValueError):
    """A discriminant is not ≡ 0,1 mod 4 or is not fundamental."""


class CaseIndexError(KudlaToolkitError, ValueError):
    """The pair (gamma, m) does not name a component of the lattice."""


class DomainError(KudlaToolkitError, ValueError):
    """An argument lies outside the domain of an operation (z not in H_2, v <= 0, ...)."""


class SingularPointError(KudlaToolkitError):
    """The point z lies on the Heegner divisor of one of the summed vectors."""

    def __init__(self, message, vector=None, distance=None):
        super().__init__(message)
        self.vector = vector
        self.distance = distance


class ConvergenceError(KudlaToolkitError):
    """A quadrature or series did not reach its tolerance within the configured caps."""


class EnumerationLimitError(KudlaToolkitError):
    """A lattice enumeration produced more points than the configured cap."""


class MajorantError(KudlaToolkitError):
    """The assembled majorant Gram matrix is not positive definite."""
