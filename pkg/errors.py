"""Exception hierarchy shared by the library modules and the CLI."""


class ShiAtlasError(Exception):
    """Base class for every error raised by this package."""
    exit_code = 1


class InvalidInputError(ShiAtlasError, ValueError):
    """A value violates the invariant of the type it claims to be."""
    exit_code = 2


class NotACoreError(InvalidInputError):
    """An encoding conversion was requested for a partition that is not an n-core."""


class PreconditionError(ShiAtlasError):
    """A well-formed input does not satisfy the precondition of an operation."""
    exit_code = 3


class VerificationError(ShiAtlasError):
    """An internal consistency check failed."""
    exit_code = 4
