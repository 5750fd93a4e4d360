"""Exception types raised across the package."""


class ChebError(Exception):
    """Base class for all package errors."""


class NoConvergence(ChebError, ArithmeticError):
    """Simultaneous root iteration did not settle within its sweep cap."""


class MapOverflow(ChebError, OverflowError):
    """Map coefficients do not fit the 128-bit integer budget."""


class PoleInput(ChebError, ValueError):
    """Derivative requested at the pole of the map."""


class BoundaryInput(ChebError, ValueError):
    """Real-line query at one of the distinguished points 0, 1, e1, e2, xi."""


class ZeroInput(ChebError, ValueError):
    """The line map phi is undefined at y = 0."""


class DomainError(ChebError, ValueError):
    pass


class NoCrossing(ChebError):
    """Both ends of a probe segment carry the same verdict."""


class EmptyJulia(ChebError):
    """A raster contains no pixel that samples the Julia set."""


class CoverageError(ChebError):
    """A critical point lies outside the raster window."""
