"""Exception types raised by the engine.

Domain errors derive from :class:`HLatticeError` so the CLI can map them
to exit code 1 in one place.
"""


class HLatticeError(ValueError):
    pass


class NotHMember(HLatticeError):
    """Raised when ``|x| mod 6`` is not 1 or 5."""


class NotPrime(HLatticeError):
    pass


class OutOfDomain(HLatticeError):
    pass


class QuadrantMismatch(HLatticeError):
    pass


class RangeTooLarge(HLatticeError):
    pass


class BadOffset(HLatticeError):
    pass


class NotInSecondSection(HLatticeError):
    """The overhang-removal procedure needs ``p >= 23``."""


class OverhangNegative(HLatticeError):
    pass


class AxisParallel(HLatticeError):
    pass


class DegeneratePoints(HLatticeError):
    pass


class HOverflowError(HLatticeError, OverflowError):
    """A value left the signed 64-bit range."""


class NoSolution(HLatticeError, LookupError):
    """No admissible decomposition exists.

    This is an empirical result, not a bug; the offending number is kept
    in ``.n`` so callers can report it.
    """

    def __init__(self, n, message=None):
        self.n = n
        super().__init__(message or f"no admissible solution for {n}")


class IdentityViolation(AssertionError):
    """A census failed one of its exact marginal identities.

    Never expected to fire; it signals an implementation bug.
    """
