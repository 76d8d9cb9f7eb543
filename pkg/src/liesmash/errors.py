"""Shared exception types, mapped to CLI exit codes 1, 2 and 3."""


class InputError(ValueError):
    """Malformed input data (files, descriptors, element strings)."""


class PreconditionError(ValueError):
    """A mathematical precondition of an operation is violated."""


class VerificationError(RuntimeError):
    """An internal exact verification failed."""
