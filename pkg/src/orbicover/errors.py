class InvalidInputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class InconsistencyError(RuntimeError):
    """Raised when a computed object violates an invariant that should hold by construction.

    Seeing one of these means there is a bug (or a corrupted move table), not bad input.
    """
