"""Exception hierarchy shared by every thermodarboux module."""

from typing import Optional


class ThermoDarbouxError(Exception):
    """Base class for all thermodarboux errors."""
    pass


class NumericsError(ThermoDarbouxError):
    """Raised when a numerical evaluation cannot produce a finite value."""
    pass


class DomainError(NumericsError):
    """Raised for a non-finite sample or a point outside a validated domain.

    Attributes:
        x: Offending abscissa, if known
    """

    def __init__(self, message: str, x: Optional[float] = None):
        super().__init__(message)
        self.x = x


class SingularityError(NumericsError):
    """Raised when an expression has a pole at the requested point.

    Attributes:
        x: Location of the pole
    """

    def __init__(self, message: str, x: Optional[float] = None):
        super().__init__(message)
        self.x = x


class NodeError(SingularityError):
    """Raised when a zero mode vanishes, so its logarithmic derivative has a pole."""
    pass


class NumericOverflowError(NumericsError):
    """Raised when a result exceeds the representable floating-point range."""
    pass


class ArgumentError(ThermoDarbouxError, ValueError):
    """Raised when an argument violates an operation's precondition."""
    pass


class UnsupportedError(ThermoDarbouxError):
    """Raised when an operation is not available for the requested family."""
    pass


class LambdaValidationError(ThermoDarbouxError):
    """Raised when a Darboux parameter makes I0(x) + lambda vanish on the domain.

    Attributes:
        report: The LambdaValidation report with the forbidden brackets
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NormalizationError(ThermoDarbouxError):
    """Raised when the third-law entropy constant is not finite."""
    pass


class InsufficientDomainError(ThermoDarbouxError):
    """Raised when a grid is too narrow to resolve asymptotic plateaus."""
    pass


class InfiniteTemperatureError(ThermoDarbouxError):
    """Raised when x = 0, i.e. the temperature is infinite."""
    pass
