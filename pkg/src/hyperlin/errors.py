"""Exception hierarchy shared by every module."""


class HyperlinError(Exception):
    """Base class for all library errors."""


class LightConeError(HyperlinError, ZeroDivisionError):
    """Raised when inverting a hyperbolic number with x**2 == y**2."""


class SpecMismatchError(HyperlinError, ValueError):
    pass


class DimensionMismatchError(HyperlinError, ValueError):
    pass


class NotSelfAdjointError(HyperlinError, ValueError):
    pass


class ConvergenceError(HyperlinError, ArithmeticError):
    pass


class GridMismatchError(HyperlinError, ValueError):
    pass


class UnsupportedOrderError(HyperlinError, ValueError):
    pass


class GridAlignmentError(HyperlinError, ValueError):
    pass


class NotInDomainError(HyperlinError, ValueError):
    """Raised by the commutator check for vectors whose entries do not sum to zero.

    ``residual`` holds the exact componentwise value of ``[Q, P]x - i x``.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class UnknownSuiteError(HyperlinError, KeyError):
    pass


class ConfigError(HyperlinError, ValueError):
    pass
