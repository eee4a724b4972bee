"""Exception hierarchy shared by every layer of the engine."""


class PadicGMError(Exception):
    """Base class for all errors raised by padic_gm."""


class DomainError(PadicGMError, ValueError):
    """An argument lies outside the domain of the operation."""


class PrecisionError(PadicGMError, ArithmeticError):
    """The requested result cannot be produced at the working precision.

    ``deficit`` is the number of p-adic digits (or u-degrees) missing, when known.
    """

    def __init__(self, message, deficit=None):
        super().__init__(message)
        self.deficit = deficit


class CoordinateError(PadicGMError, ValueError):
    """A form is expressed in the wrong splitting coordinates for the operation."""


class UnsupportedError(PadicGMError, NotImplementedError):
    """Documented limitation of the desk-scale model."""


class CalibrationError(PadicGMError, RuntimeError):
    """The lambda calibration search found zero or several candidates."""

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals or {}


class NotEigenError(PadicGMError, ValueError):
    """Raised by ``eigenvalue`` when ``op(F)`` is not a multiple of ``F``.

    ``index`` is ``(component, n)`` of the first discrepant coefficient.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class SchemaError(PadicGMError, ValueError):
    """Malformed or version-mismatched serialized data."""
