"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class EGHError(Exception):
    """Base class for every error raised by this package."""


class ParseError(EGHError, ValueError):
    """Malformed polynomial or ideal text.

    ``position`` is the 0-based character offset of the offending token
    (``line`` is set for ideal files).
    """

    def __init__(self, message: str, position: int | None = None, line: int | None = None):
        self.message = message
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"offset {position}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class NotHomogeneousError(EGHError, ValueError):
    pass


class ResourceLimitError(EGHError):
    """A Groebner computation exceeded the configured degree or size guard."""


class DegreeBoundRequired(EGHError, ValueError):
    """Hilbert function of a non-Artinian quotient requested without a bound."""


class NotAchievableError(EGHError, ValueError):
    """A Hilbert function target cannot be realised by the requested construction."""


class LinkageError(EGHError):
    """A linkage precondition does not hold."""


class NotCompleteIntersectionError(LinkageError):
    pass


class VerificationError(EGHError):
    """An identity that should hold was checked and failed."""


class GenericityError(EGHError):
    """Random choices over the prime field failed to be generic after all retries."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
