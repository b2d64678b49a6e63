__all__ = [
    "CisError",
    "InvalidAlgebraError",
    "NotARootError",
    "UnsupportedCaseError",
    "ExcludedCaseError",
    "NoClosedFormError",
    "ConsistencyError",
    "ModelMismatchError",
    "NotAffineError",
]


class CisError(Exception):
    """Base class for every error raised by the package."""


class InvalidAlgebraError(CisError, ValueError):
    pass


class NotARootError(CisError, ValueError):
    pass


class UnsupportedCaseError(CisError, ValueError):
    pass


class ExcludedCaseError(UnsupportedCaseError):
    """D_n(n-2): the Levi factor has three simple ideals."""


class NoClosedFormError(CisError):
    """Constituent of type 1b or 3."""


class ConsistencyError(CisError, AssertionError):
    """A structural identity failed; the message names it."""


class ModelMismatchError(CisError, ValueError):
    pass


class NotAffineError(CisError, ValueError):
    pass
