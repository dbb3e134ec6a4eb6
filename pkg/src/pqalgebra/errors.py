"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for domain errors raised by this package."""


class SingularParameter(AlgebraError):
    """A parameter combination makes the requested map non-invertible."""


class UnsupportedTransform(AlgebraError):
    """The requested basis change is not defined for these parameters."""


class DegenerateNorm(AlgebraError):
    """The norm of the divisor is too close to zero to divide by."""


class ComplexParameters(AlgebraError):
    """An operation restricted to real parameters received complex ones."""


class PoleAtEvenK(AlgebraError):
    """The periodic power law has a pole at even exponents k."""
