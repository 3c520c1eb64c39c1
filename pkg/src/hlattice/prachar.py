"""Prime-pair lattice points on rational lines through points of H x H.

Here lattice coordinates are the *signed* members of H, i.e. integers
``≡ 1 (mod 6)``: the negative arm -5, -11, ... carries the H- branch. The
line ``y = (x + 1) / 2`` through (1, 1) holds the points ``(12k + 1, 6k + 1)``;
points with both ``|x|`` and ``|y|`` prime are pairs ``(q, p)`` with
``p = (q - 1) / 2`` (or ``(q + 1) / 2`` on the negative arm).

Slopes are exact integer pairs; no floating point is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import AxisParallel, DegeneratePoints, NotHMember
from .sieve import is_prime

ORIGIN = (1, 1)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _check_point(point) -> tuple[int, int]:
    x, y = (int(c) for c in point)
    for c in (x, y):
        if c % 6 != 1:
            raise NotHMember(f"{c} is not a signed member of H (need c ≡ 1 mod 6)")
    return x, y


@dataclass(frozen=True)
class LatticeLine:
    """The line through ``anchor`` and ``second`` with slope ``dy/dx``.

    ``slope`` is stored in lowest terms with ``dx > 0``.
    """

    anchor: tuple[int, int]
    second: tuple[int, int]
    slope: tuple[int, int]

    @property
    def step(self) -> tuple[int, int]:
        """Smallest displacement along the line that stays on the lattice."""
        dy, dx = self.slope
        t = _lcm(6 // gcd(dx, 6), 6 // gcd(dy, 6))
        return dx * t, dy * t

    def contains(self, x: int, y: int) -> bool:
        dy, dx = self.slope
        x1, y1 = self.anchor
        return (y - y1) * dx == (x - x1) * dy

    def points(self, limit: int) -> list[tuple[int, int]]:
        """Lattice points with ``|x|, |y| <= limit``, ordered by ``x``."""
        sx, sy = self.step
        x1, y1 = self.anchor
        k_lo, k_hi = _k_range(x1, sx, limit)
        a, b = _k_range(y1, sy, limit)
        k_lo, k_hi = max(k_lo, a), min(k_hi, b)
        return [(x1 + k * sx, y1 + k * sy) for k in range(k_lo, k_hi + 1)]

    def descriptor(self) -> dict:
        return {
            "anchor": list(self.anchor),
            "second": list(self.second),
            "slope": list(self.slope),
        }


def _k_range(c0: int, step: int, limit: int) -> tuple[int, int]:
    """Integer ``k`` range with ``|c0 + k*step| <= limit`` for ``step > 0``."""
    if step < 0:
        lo, hi = _k_range(-c0, -step, limit)
        return lo, hi
    lo = -((limit + c0) // step)  # ceil((-limit - c0) / step)
    hi = (limit - c0) // step
    return lo, hi


def line_through(second, anchor=ORIGIN) -> LatticeLine:
    """Two-point line ``(y - y1)/(x - x1) = (y2 - y1)/(x2 - x1)``."""
    x1, y1 = _check_point(anchor)
    x2, y2 = _check_point(second)
    if (x1, y1) == (x2, y2):
        raise DegeneratePoints("the two points coincide")
    dx, dy = x2 - x1, y2 - y1
    if dx == 0 or dy == 0:
        raise AxisParallel("axis-parallel lines carry a unit coordinate and are excluded")
    g = gcd(dx, dy)
    dx, dy = dx // g, dy // g
    if dx < 0:
        dx, dy = -dx, -dy
    return LatticeLine((x1, y1), (x2, y2), (dy, dx))


def both_prime(x: int, y: int) -> bool:
    return is_prime(abs(x)) and is_prime(abs(y))


def line_solutions(line: LatticeLine, limit: int) -> list[tuple[int, int]]:
    """Points of ``line`` within ``|x|, |y| <= limit`` whose coordinates are prime in absolute value."""
    if limit <= 0:
        raise ValueError("limit must be positive")
    return [pt for pt in line.points(limit) if both_prime(*pt)]


PPT_LINE = LatticeLine(ORIGIN, (13, 7), (1, 2))


def ppt_lattice_points(limit: int) -> list[tuple[int, int]]:
    """Lattice points ``(12k + 1, 6k + 1)`` with ``|x| <= limit``."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    return PPT_LINE.points(limit)


def ppt_solutions(limit: int) -> list[tuple[int, int]]:
    return [pt for pt in ppt_lattice_points(limit) if both_prime(*pt)]
