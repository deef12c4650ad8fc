"""
Exceptions raised by the ChosenNum modules. All derive from ValueError so
callers that only know about bad arguments still catch them.
"""


class ChosenNumError(ValueError):
    """Base class for every library error."""


class InvalidParameterError(ChosenNumError):
    """A parameter is outside its documented range (c, a, bounds, trials)."""


class MissingPrimeError(ChosenNumError):
    """A numerator sequence lacks a prime that the operation needs."""

    def __init__(self, prime, method=None):
        self.prime = prime
        where = f" ({method} sequence)" if method else ""
        super().__init__(f"sequence has no entry for prime {prime}{where}")


class BudgetExhaustedError(ChosenNumError):
    """Block construction hit max_bound before reaching the block's epsilon."""

    def __init__(self, block, max_bound):
        self.block = block
        self.max_bound = max_bound
        super().__init__(f"budget exhausted at block {block}")


class RangeTooLargeError(ChosenNumError):
    """An exact sweep or enumeration would exceed its configured guard."""


class ImprecisionError(ChosenNumError):
    """The real approximant is too coarse for the requested prime range."""


class SieveIdentityError(ChosenNumError):
    """An exact identity that must always hold was violated."""
