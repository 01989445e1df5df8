"""Exception types raised across the package."""


class GrassmannError(ValueError):
    """Base class for all package errors."""


class DomainMismatchError(GrassmannError):
    """Operands live over different scalar domains (or different ranks)."""


class NegationUndefinedError(GrassmannError):
    """Negation was requested on a term of degree 0 or 1."""


class DegreeError(GrassmannError):
    """An operand has the wrong exterior degree for the operation."""


class UnsupportedDomainError(GrassmannError):
    """The operation is not available over the requested scalar domain."""


class ScalarParseError(GrassmannError):
    """A scalar literal could not be read for the requested domain."""


class MatrixParseError(GrassmannError):
    """A matrix description could not be turned into an endomorphism."""
