"""Exception types shared by every module of the package."""


class ShaferBoundsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ShaferBoundsError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(ShaferBoundsError, ArithmeticError):
    """A denominator is too close to zero for the result to be trustworthy.

    Reachable only for shape parameters in a narrow negative band where
    either ``alpha + sqrt(1+x) + sqrt(1-x)`` or
    ``alpha*(sqrt(1+x) + sqrt(1-x)) + 4`` vanishes at some interior x.
    """


class RegimeError(ShaferBoundsError, ValueError):
    """The requested operation is undefined in this monotonicity regime."""


class ConvergenceError(ShaferBoundsError, RuntimeError):
    """An iterative solver exhausted its iteration budget or had no valid bracket."""
