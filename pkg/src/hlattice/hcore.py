"""Arithmetic of the two-armed sequence H = (±6; 1).

Every integer coprime to 6 is written ``|x| = 6*s ± 1``. The index ``s``
is the *träger* (carrier) and the sign picks the branch: ``H+ = {1, 7, 13, ...}``
and ``H- = {-1, 5, 11, ...}``. The negative arm of H (-5, -11, ...) folds onto
H- by negation, so coordinates are always read off ``|value|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum

from .errors import HOverflowError, NotHMember

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


class Branch(IntEnum):
    PLUS = 1
    MINUS = -1

    @property
    def symbol(self) -> str:
        return "+" if self is Branch.PLUS else "-"

    @classmethod
    def parse(cls, token) -> "Branch":
        if isinstance(token, Branch):
            return token
        if token in (1, "+", "plus", "PLUS"):
            return cls.PLUS
        if token in (-1, "-", "minus", "MINUS"):
            return cls.MINUS
        raise ValueError(f"not a branch: {token!r}")


class MemberClass(str, Enum):
    UNIT = "unit"
    PRIME = "prime"
    MULTIPLE = "multiple"


def check_int64(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise HOverflowError(f"{value} exceeds the signed 64-bit range")
    return value


def traeger_of(x: int) -> tuple[int, Branch]:
    """Return ``(s, branch)`` with ``|x| = 6*s + branch``.

    The sign of ``x`` is ignored except for ``-1``, which is the träger-0
    member of H- and maps to ``(0, MINUS)``.

    >>> traeger_of(7)
    (1, <Branch.PLUS: 1>)
    >>> traeger_of(-5)
    (1, <Branch.MINUS: -1>)
    """
    x = int(x)
    if x == -1:
        return 0, Branch.MINUS
    a = abs(x)
    r = a % 6
    if r == 1:
        return (a - 1) // 6, Branch.PLUS
    if r == 5:
        return (a + 1) // 6, Branch.MINUS
    raise NotHMember(f"{x} is not of the form 6s±1")


def is_hmember(x: int) -> bool:
    return abs(int(x)) % 6 in (1, 5)


@dataclass(frozen=True)
class HMember:
    """An integer coprime to 6, carried with its träger and branch.

    Build one with :meth:`of` (from a signed value) or
    :func:`member_from_traeger`.
    """

    value: int
    traeger: int
    branch: Branch

    def __post_init__(self):
        check_int64(self.value)
        if (self.traeger, self.branch) != traeger_of(self.value):
            raise NotHMember(
                f"inconsistent coordinates for {self.value}: "
                f"s={self.traeger}, branch={self.branch!r}"
            )

    @classmethod
    def of(cls, value: int) -> "HMember":
        s, b = traeger_of(value)
        return cls(int(value), s, b)

    @property
    def member_class(self) -> MemberClass:
        from .sieve import is_prime

        a = abs(self.value)
        if a == 1:
            return MemberClass.UNIT
        return MemberClass.PRIME if is_prime(a) else MemberClass.MULTIPLE

    def __int__(self) -> int:
        return self.value

    def __mul__(self, other: "HMember") -> "HMember":
        return h_product(self, other)


def member_from_traeger(s: int, branch) -> HMember:
    """The member ``6*s + 1`` (branch +) or ``6*s - 1`` (branch -).

    At ``s = 0`` the branches give the units +1 and -1.
    """
    if s < 0:
        raise ValueError("träger must be non-negative")
    b = Branch.parse(branch)
    if s == 0:
        return HMember(int(b), 0, b)
    return HMember(check_int64(6 * s + int(b)), s, b)


def h_product(x: HMember, y: HMember) -> HMember:
    """Product in the semigroup H.

    The branch of the result is the product of the branches; ``-1`` as a
    factor is the one exception because it is a unit of H- only in the
    folded picture.
    """
    return HMember.of(check_int64(x.value * y.value))


def power_branch(p: HMember, n: int) -> Branch:
    """Branch of ``p**n`` without forming the power."""
    if n < 1:
        raise ValueError("exponent must be positive")
    if p.branch is Branch.PLUS or n % 2 == 0:
        return Branch.PLUS
    return p.branch


# (x branch, y branch) -> quadrant; the second quadrant holds (H-, H+) points
# such as (-5, 7) on the twin diagonal.
_QUADRANTS = {
    (Branch.PLUS, Branch.PLUS): 1,
    (Branch.MINUS, Branch.PLUS): 2,
    (Branch.MINUS, Branch.MINUS): 3,
    (Branch.PLUS, Branch.MINUS): 4,
}


@dataclass(frozen=True)
class LatticePoint:
    x: HMember
    y: HMember

    @classmethod
    def of(cls, x: int, y: int) -> "LatticePoint":
        return cls(HMember.of(x), HMember.of(y))

    @property
    def quadrant(self) -> int:
        return quadrant_of(self)

    def as_tuple(self) -> tuple[int, int]:
        return self.x.value, self.y.value


def quadrant_of(point: LatticePoint) -> int:
    return _QUADRANTS[point.x.branch, point.y.branch]
