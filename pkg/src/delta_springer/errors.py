"""Exception types shared across the package."""


class GuardError(ValueError):
    """An input exceeds a configured size guard.

    ``guard`` names the limit that was hit and ``override`` the CLI flag (or
    keyword) that lifts it.
    """

    def __init__(self, message, guard=None, override="--unsafe-size"):
        super().__init__(message)
        self.guard = guard
        self.override = override


class VerificationError(AssertionError):
    """A computed object failed a structural check that should never fail.

    ``witness`` carries machine-readable data about the failure.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
