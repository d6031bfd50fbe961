"""Exception hierarchy.

Usage errors (bad input) and refusals (caps, poles, under-truncation) are kept
apart so the CLI can map them onto different exit statuses.
"""


class HurwitzError(Exception):
    """Base class for every error raised by this package."""


class UsageError(HurwitzError, ValueError):
    """Malformed input: bad partition text, weight mismatch, bad arguments."""


class RefusalError(HurwitzError):
    """A well-formed request that the engine declines to compute."""


class CapExceededError(RefusalError):
    def __init__(self, what, value, cap):
        self.value = value
        self.cap = cap
        super().__init__(f"{what} {value} exceeds the configured cap {cap}")


class PoleError(RefusalError, ZeroDivisionError):
    """A parameter choice makes one of the hypergeometric factors singular."""


class TruncationError(RefusalError):
    """A coefficient was requested beyond the degree caps of a series."""
