#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
Exceptions raised by ``fqk``. Every domain error is a ``ValueError`` so that callers that only care about bad
input can catch that.
"""


class FQKError(ValueError):
    pass


class DimensionMismatch(FQKError):
    pass


class InvalidDimension(FQKError):
    """A real number below 2 that is not of the form 2cos(pi/m)"""


class FPdimConvergenceError(FQKError):
    """Power iteration hit its cap; the structure constants are likely invalid or not transitive"""


class NotReflectable(FQKError):
    pass


class MissingAction(FQKError):
    """An edge label cannot be turned into an action matrix on the chosen module"""


class InfiniteComponent(FQKError):
    pass


class InfiniteType(FQKError):
    pass


class SignIncoherentInput(FQKError):
    pass


class SignCoherenceViolation(FQKError):
    pass


class OutOfRange(FQKError):
    pass


class UnknownBuiltin(FQKError):
    pass


class InconsistentVerdict(FQKError, RuntimeError):
    """Two independent computations of the same invariant disagree"""
