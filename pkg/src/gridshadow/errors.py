"""Exception types shared across the package."""


class ResourceBudgetError(RuntimeError):
    """A computation would exceed its configured size budget."""


class InvariantViolation(AssertionError):
    """A construction step produced something that breaks a required invariant."""


class CertificationFailure(InvariantViolation):
    """Neither the edge nor the non-edge certificate conditions hold for a pair."""


class FormatError(ValueError):
    """Malformed serialized input.

    ``offset`` is the byte offset of the offending character when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset
