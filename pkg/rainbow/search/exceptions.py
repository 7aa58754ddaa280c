"""Errors raised by the certificate search."""


class SearchError(RuntimeError):
    """The search reached a state it must never report, e.g. an unverified solution."""


class InvalidConfig(ValueError):
    """A search configuration breaks one of its invariants.

    ``invariant`` names the violated rule so callers can report it.
    """

    def __init__(self, message: str, *, invariant: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant
