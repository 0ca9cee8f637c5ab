"""Exception hierarchy. Every error carries a stable, greppable message prefix."""

from __future__ import annotations


class QuadOrderError(Exception):
    """Base class; str(exc) always starts with the class name."""

    def __init__(self, message: str = ""):
        self.message = message
        super().__init__(f"{type(self).__name__}: {message}" if message else type(self).__name__)


class NotSquarefree(QuadOrderError):
    pass


class DegenerateD(QuadOrderError):
    pass


class NotPrime(QuadOrderError):
    pass


class ImaginaryField(QuadOrderError):
    pass


class RealField(QuadOrderError):
    pass


class RealFieldRequired(QuadOrderError):
    pass


class RealFieldUnsupported(QuadOrderError):
    pass


class BoundExceeded(QuadOrderError):
    pass


class SizeCapExceeded(QuadOrderError):
    pass


class ModulusMismatch(QuadOrderError):
    pass


class ModulusTooLarge(QuadOrderError):
    pass


class FactorizationBoundExceeded(QuadOrderError):
    pass


class BadDiscriminant(QuadOrderError):
    pass


class DiscMismatch(QuadOrderError):
    pass


class NotSplitFree(QuadOrderError):
    pass


class NotCoprime(QuadOrderError):
    pass


class QDividesD(QuadOrderError):
    pass


class UsageError(QuadOrderError):
    pass


class InternalError(QuadOrderError):
    """Invariant violated; indicates a bug, not bad input."""
