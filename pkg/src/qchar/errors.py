"""Exceptions shared across the package."""


class VerificationError(Exception):
    """An exact identity that must hold failed to hold.

    Raised when two independently computed values disagree, when a
    projection receives input outside its stated precondition, or when a
    matrix that must be scalar is not. The message carries enough of the
    offending data to reproduce the failure.
    """
