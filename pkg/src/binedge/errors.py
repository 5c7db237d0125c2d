class ContractViolation(ValueError):
    """An operation was called outside its precondition."""


class InvariantViolation(AssertionError):
    """A structural fact that must hold for every input failed to hold.

    Raised loudly instead of being papered over: it means either a bug here
    or a counterexample to the underlying mathematics.
    """


class ResourceLimitExceeded(RuntimeError):
    """A configured cap (vertices, poset elements, chains, time) was hit."""

    def __init__(self, message: str, **stats):
        super().__init__(message)
        self.stats = stats
