"""Exception hierarchy shared by every module."""


class HarmonicError(Exception):
    """Base class for all errors raised by harmtri."""


class InvalidTrinomial(HarmonicError, ValueError):
    """Coefficients or exponents violate the trinomial invariants."""


class DegenerateCoefficient(HarmonicError, ValueError):
    """An operation needs a coefficient that is zero."""


class NotATriangle(HarmonicError, ValueError):
    """The three side lengths violate a triangle inequality."""


class DegenerateTriangle(HarmonicError, ValueError):
    """The three side lengths satisfy a triangle equality within tolerance."""


class OnBoundary(HarmonicError, ValueError):
    """The radius sits on a circle where root counting is ill-posed."""

    def __init__(self, message, v=None, reason=None):
        super().__init__(message)
        self.v = v
        self.reason = reason


class ExponentMismatch(HarmonicError, ValueError):
    """Two trinomials do not share the exponent pair (n, m)."""


class InvalidGeometry(HarmonicError, ValueError):
    """Trochoid parameters cannot satisfy R > r > 0."""


class NoConvergence(HarmonicError, ArithmeticError):
    """An iterative solver exhausted its iteration budget."""


class SingularJacobian(HarmonicError, ArithmeticError):
    """Newton iteration met a (numerically) singular real Jacobian."""


class OracleIncomplete(HarmonicError, ArithmeticError):
    """The root oracle accepted more roots than the n + 3m bound allows."""
