"""Relevance intervals ``[p², q²)`` between consecutive prime squares.

The plus-branch interval holds the H+ members ``p² <= x < q²``; its minus
twin is the same träger range read on H-, i.e. every value shifted by -2.
Both have ``L = (q² - p²) / 6`` members.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HOverflowError, NotPrime
from .hcore import INT64_MAX, Branch, MemberClass
from .sieve import SegmentClassification, classify_segment, is_prime, primes_upto


def next_prime(p: int) -> int:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    n = p + 1
    while not is_prime(n):
        n += 1
        if n > INT64_MAX:
            raise HOverflowError("no prime below the 64-bit ceiling")
    return n


@dataclass(eq=False)
class RelevanceInterval:
    p: int
    q: int
    plus_members: SegmentClassification
    minus_members: SegmentClassification

    @property
    def L(self) -> int:
        return (self.q * self.q - self.p * self.p) // 6

    @property
    def gap_f(self) -> int:
        return self.q - self.p

    @property
    def traeger_range(self) -> range:
        return range(self.plus_members.traeger_lo, self.plus_members.traeger_hi)


def relevance_interval(p: int) -> RelevanceInterval:
    if p <= 3 or not is_prime(p):
        raise NotPrime(f"{p} is not a prime greater than 3")
    q = next_prime(p)
    if q * q > INT64_MAX:
        raise HOverflowError(f"{q}² exceeds the 64-bit range")
    lo = (p * p - 1) // 6
    hi = (q * q - 1) // 6
    plus = classify_segment(Branch.PLUS, lo, hi)
    minus = classify_segment(Branch.MINUS, lo, hi)
    return RelevanceInterval(p, q, plus, minus)


@dataclass(frozen=True)
class IntervalCounts:
    p: int
    q: int
    L: int
    gap_f: int
    primes_plus: int
    primes_minus: int
    multiples_plus: int
    multiples_minus: int

    # column order of the reference table; ``d`` is the prime gap
    CSV_HEADER = ("p", "q", "L", "primes_plus", "primes_minus", "multiples_plus", "multiples_minus", "d")

    def as_row(self) -> tuple[int, ...]:
        return (
            self.p,
            self.q,
            self.L,
            self.primes_plus,
            self.primes_minus,
            self.multiples_plus,
            self.multiples_minus,
            self.gap_f,
        )


def counts_of(interval: RelevanceInterval) -> IntervalCounts:
    pp = interval.plus_members.count(MemberClass.PRIME)
    pm = interval.minus_members.count(MemberClass.PRIME)
    L = interval.L
    return IntervalCounts(interval.p, interval.q, L, interval.gap_f, pp, pm, L - pp, L - pm)


def interval_counts(p: int) -> IntervalCounts:
    return counts_of(relevance_interval(p))


def interval_table(p_max: int, *, group_by_gap: bool = False) -> list[IntervalCounts]:
    """One row per prime ``5 <= p <= p_max``.

    With ``group_by_gap`` rows are ordered by gap, then by ``p``; otherwise
    by ascending ``p``.
    """
    if p_max < 5:
        raise ValueError("p_max must be at least 5")
    rows = [interval_counts(p) for p in primes_upto(p_max, min_prime=5).tolist()]
    if group_by_gap:
        rows.sort(key=lambda r: (r.gap_f, r.p))
    return rows
