"""Exception hierarchy.

Every error raised deliberately by the library derives from
:class:`TorusZetaError`; the value-like ones also derive from ``ValueError``
so callers that only know the stdlib still catch them.
"""


class TorusZetaError(Exception):
    pass


class NonPrimeError(TorusZetaError, ValueError):
    pass


class ReducibleModulusError(TorusZetaError, ValueError):
    pass


class DegreeMismatchError(TorusZetaError, ValueError):
    pass


class ZeroPolynomialError(TorusZetaError, ValueError):
    pass


class ZeroRootError(TorusZetaError, ValueError):
    pass


class NotIrreducibleError(TorusZetaError, ValueError):
    pass


class BothZeroError(TorusZetaError, ValueError):
    pass


class FieldMismatchError(TorusZetaError, ValueError):
    pass


class SingularMatrixError(TorusZetaError, ValueError):
    pass


class StripMismatchError(TorusZetaError, ValueError):
    pass


class InternalInconsistency(TorusZetaError, RuntimeError):
    """A cross-check between two independent computations failed."""


class NonIntegerExponentError(InternalInconsistency):
    pass


class InsufficientTermsError(TorusZetaError, ValueError):
    pass


class WindowTooShortError(TorusZetaError, ValueError):
    pass


class PreconditionViolated(TorusZetaError, ValueError):
    def __init__(self, failed):
        self.failed = list(failed)
        super().__init__("precondition(s) violated: " + ", ".join(self.failed))
