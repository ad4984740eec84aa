"""Exception types shared across the package."""


class OrbitCohomError(Exception):
    """Base class for all package errors."""


class InvalidInputError(OrbitCohomError, ValueError):
    """Malformed or out-of-range input (bad fiber file, n = 0, cap too small, ...)."""


class PreconditionError(OrbitCohomError, ValueError):
    """A documented operation precondition was violated by the caller."""


class UnsupportedShapeError(OrbitCohomError, ValueError):
    """The input is structurally valid but outside the supported shape
    (rows of rank > 1, fragmented base row, non-monomial relations, ...)."""


class WrongGroupError(OrbitCohomError, ValueError):
    """An operation specific to the Z/2 theory was asked about a circle result."""


class OversizedInstanceError(OrbitCohomError, ValueError):
    """The brute-force oracle refuses instances beyond desk scale."""
