"""Exception hierarchy shared by the kernel, the scenario language and the CLI."""

from __future__ import annotations


class QuarticaError(Exception):
    """Base class for every error raised by this package."""


# exact-field
class MalformedSpec(QuarticaError):
    pass


class DegenerateExtension(QuarticaError):
    pass


class TowerMismatch(QuarticaError):
    pass


class DivisionByZero(QuarticaError, ZeroDivisionError):
    pass


class NotASquare(QuarticaError):
    pass


# multipoly
class NotHomogeneous(QuarticaError):
    pass


class DegenerateInput(QuarticaError):
    pass


class ZeroPolynomial(QuarticaError):
    pass


class FieldTooSmall(QuarticaError):
    """Roots exist only in a larger field than the one at hand.

    ``pattern`` carries whatever coordinate-free data was computed before
    giving up, so callers can still report it.
    """

    def __init__(self, message: str, pattern=None):
        super().__init__(message)
        self.pattern = pattern


# proj-geometry
class IdenticalInputs(QuarticaError):
    pass


class NotCollinear(QuarticaError):
    pass


class NotDistinct(QuarticaError):
    pass


# curve-contact
class SingularPoint(QuarticaError):
    pass


class PointNotOnCurve(QuarticaError):
    pass


class PointNotOnBoth(QuarticaError):
    pass


class ComponentLine(QuarticaError):
    pass


class DegenerateCurve(QuarticaError):
    pass


# arrangement-census / pointset-ideals
class CommonComponent(QuarticaError):
    pass


class ProjectionCollision(QuarticaError):
    pass


class UnexplainedCoincidence(QuarticaError):
    pass


class SpecInconsistent(QuarticaError):
    pass


class CertificateFailure(QuarticaError):
    def __init__(self, clause: str, message: str = ""):
        super().__init__(f"clause ({clause}) failed" + (f": {message}" if message else ""))
        self.clause = clause


class MismatchedLocus(QuarticaError):
    pass


# atlas / plotting
class UnknownId(QuarticaError, KeyError):
    pass


class LoadVerificationFailure(QuarticaError):
    pass


class NothingVisible(QuarticaError):
    pass
