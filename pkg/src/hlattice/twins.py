"""Twin pairs on the second-quadrant diagonal and overhang removal.

Each träger ``s`` pairs ``6s - 1`` (H-) with ``6s + 1`` (H+). On a relevance
interval these parallel pairs are typed pp / pv / vp / vv (minus side first)
and the removal procedure strips the forced pairings in two steps:

1. ``v_minus - p_plus`` vv pairs (the vv overhang, equal to ``v_plus - p_minus``)
2. ``|n_vp - n_pv|`` pairs of the more frequent mixed type

which leaves a balanced census with ``n_pv = n_vp`` and ``n_vv = n_pp``.
Removal is deterministic (top of the type-sorted listing first); only the
counts carry meaning, not which rows survive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadOffset, NotInSecondSection, NotPrime, OverhangNegative
from .goldbach2 import PAIR_TYPES, PairCensus, PairType, census_from_codes, pair_codes
from .hcore import Branch
from .intervals import relevance_interval
from .sieve import SegmentClassification, classify_segment, is_prime, prime_table, primes_upto

SECOND_SECTION_START = 23

# listing order of the sorted step
SORT_ORDER = (PairType.VV, PairType.PV, PairType.VP, PairType.PP)


@dataclass(frozen=True)
class TwinPoint:
    traeger: int
    minus_value: int
    plus_value: int
    pair_type: PairType


def twin_pairs(limit: int) -> list[TwinPoint]:
    """All twin primes ``(6s-1, 6s+1)`` with ``6s + 1 <= limit``."""
    if limit < 7:
        return []
    top = (limit - 1) // 6
    table = prime_table(6 * top + 1)
    s = np.arange(1, top + 1, dtype=np.int64)
    hit = table[6 * s - 1] & table[6 * s + 1]
    return [TwinPoint(t, 6 * t - 1, 6 * t + 1, PairType.PP) for t in s[hit].tolist()]


@dataclass(frozen=True)
class DiagonalRow:
    """One parallel pair of a relevance interval; ``row`` is 1-based."""

    row: int
    minus_value: int
    plus_value: int
    pair_type: PairType


def _rows(plus: SegmentClassification, minus: SegmentClassification) -> list[DiagonalRow]:
    codes = pair_codes(minus.is_prime_mask, plus.is_prime_mask)
    return [
        DiagonalRow(i + 1, v, v + 2, PAIR_TYPES[c])
        for i, (v, c) in enumerate(zip(minus.values.tolist(), codes.tolist()))
    ]


def diagonal_rows(p: int) -> list[DiagonalRow]:
    interval = relevance_interval(p)
    return _rows(interval.plus_members, interval.minus_members)


def initial_diagonal_rows() -> list[DiagonalRow]:
    """The pairs below 5², from the unit pair (-1, 1) up to (17, 19).

    This is the stretch that precedes the first prime-square interval; its
    first row pairs the two units and is typed as if neither were prime.
    """
    hi = (5 * 5 - 1) // 6
    return _rows(classify_segment(Branch.PLUS, 0, hi), classify_segment(Branch.MINUS, 0, hi))


def _census(rows: list[DiagonalRow]) -> PairCensus:
    codes = np.array([PAIR_TYPES.index(r.pair_type) for r in rows], dtype=np.uint8)
    return census_from_codes(codes)


def diagonal_census(p: int) -> PairCensus:
    """Pair-type census of ``(H-; p²)`` against ``(H+; p²)``.

    ``first`` is the minus branch, ``second`` the plus branch, ``A = L``.
    """
    interval = relevance_interval(p)
    codes = pair_codes(interval.minus_members.is_prime_mask, interval.plus_members.is_prime_mask)
    return census_from_codes(codes)


@dataclass(frozen=True)
class StreichungTrace:
    p: int
    rows: list[DiagonalRow]
    sorted_rows: list[DiagonalRow]
    after_vv: list[DiagonalRow]
    after_mixed: list[DiagonalRow]
    original: PairCensus
    removed_vv: int
    removed_mixed: int
    removed_mixed_type: PairType | None

    @property
    def census(self) -> PairCensus:
        """Census of the rows that survive both removals."""
        return _census(self.after_mixed)

    @property
    def steps(self) -> list[list[DiagonalRow]]:
        return [self.rows, self.sorted_rows, self.after_vv, self.after_mixed, self.after_mixed]


def _drop_first(rows: list[DiagonalRow], kind: PairType, count: int) -> list[DiagonalRow]:
    kept = []
    for r in rows:
        if count and r.pair_type is kind:
            count -= 1
            continue
        kept.append(r)
    return kept


def streichung(p: int) -> StreichungTrace:
    """Run the two-step overhang removal on the interval of ``p``."""
    if not is_prime(p) or p <= 3:
        raise NotPrime(f"{p} is not a prime greater than 3")
    if p < SECOND_SECTION_START:
        raise NotInSecondSection(f"p = {p} lies below {SECOND_SECTION_START}")
    rows = diagonal_rows(p)
    original = _census(rows)
    # first = minus, second = plus
    overhang = original.v_first - original.p_second
    if overhang < 0:
        raise OverhangNegative(
            f"p = {p}: v_minus = {original.v_first} < p_plus = {original.p_second}"
        )
    rank = {t: i for i, t in enumerate(SORT_ORDER)}
    sorted_rows = sorted(rows, key=lambda r: (rank[r.pair_type], r.row))
    after_vv = _drop_first(sorted_rows, PairType.VV, overhang)

    mixed = original.n_vp - original.n_pv
    kind = None if mixed == 0 else (PairType.VP if mixed > 0 else PairType.PV)
    after_mixed = after_vv if kind is None else _drop_first(after_vv, kind, abs(mixed))
    return StreichungTrace(
        p, rows, sorted_rows, after_vv, after_mixed, original, overhang, abs(mixed), kind
    )


def generalized_twins(offset: int, limit: int) -> list[tuple[int, int]]:
    """Prime pairs ``(a, b)`` with ``a - b = offset``, ``b >= 5``, ``a <= limit``.

    Offsets ``6i`` keep both primes on one branch, ``6i + 2`` run from H- to
    H+; ``6i + 4`` is the mirrored cross-branch family.
    """
    if offset < 0 or offset % 2:
        raise BadOffset(f"offset {offset} is not of the form 6i, 6i+2 or 6i+4")
    if limit <= offset:
        raise ValueError("limit must exceed the offset")
    table = prime_table(limit)
    b = primes_upto(limit - offset, min_prime=5)
    b = b[table[b + offset]]
    return [(x + offset, x) for x in b.tolist()]
