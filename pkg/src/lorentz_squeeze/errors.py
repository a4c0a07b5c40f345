"""Exception hierarchy shared by every module of the package."""


class SqueezeError(Exception):
    """Base class for all package errors."""


class DomainError(SqueezeError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class InvalidCouplingError(DomainError):
    pass


class SingularCouplingError(DomainError):
    """Raised when ``|C| >= K``, where the potential stops being positive definite."""

    def __init__(self, message="singular coupling: |C| >= K"):
        super().__init__(message)


class NoTemperatureError(DomainError):
    pass


class KinematicsError(DomainError):
    pass


class UnsupportedOrderError(DomainError):
    pass


class AccuracyError(SqueezeError, ArithmeticError):
    """Quadrature failed to reach the requested tolerance.

    The best available estimate and its error are kept on the instance.
    """

    def __init__(self, message, estimate=float("nan"), error=float("inf")):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class ConventionError(AccuracyError):
    """A transform expected to be real produced a significant imaginary part."""
