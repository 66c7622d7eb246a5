"""Exception types shared across the package."""


class InvalidTransitionError(ValueError):
    """A push-to-the-top index lies outside {2, ..., n}."""


class ParseError(ValueError):
    """A text document (snake, K-snake, or RMGC file) is malformed."""


class VerificationError(ValueError):
    """A code failed verification (duplicate codeword, distance, or closure)."""
