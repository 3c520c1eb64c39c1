"""Primality oracle and segmented classification of H members.

A branch segment is addressed by träger: member ``t`` of branch ``b`` has
value ``6*t + b``. A prime ``q > 3`` divides exactly one träger residue per
branch, ``t ≡ -b * 6^{-1} (mod q)``, so marking multiples is a stride-``q``
walk in träger space (stride ``6q`` in value space).
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import HOverflowError, NotPrime, RangeTooLarge
from .hcore import INT64_MAX, Branch, MemberClass, traeger_of

UNIT, PRIME, MULTIPLE = 0, 1, 2
CODE_TO_CLASS = (MemberClass.UNIT, MemberClass.PRIME, MemberClass.MULTIPLE)

DEFAULT_SEGMENT_BUDGET = 1 << 24
BUDGET_ENV = "HLATTICE_SEGMENT_BUDGET"

# Largest boolean table held in the shared cache (bytes == entries).
TABLE_LIMIT = 1 << 28
_INITIAL_TABLE = 1 << 16
# is_prime answers from the table below this bound, Miller-Rabin above it.
CACHE_LIMIT = 1 << 22

# Deterministic for every n < 3.3e24, which covers the 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_lock = threading.Lock()
_table = np.zeros(0, dtype=bool)


def segment_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_SEGMENT_BUDGET
    budget = int(raw)
    if budget < 1:
        raise ValueError(f"{BUDGET_ENV} must be a positive integer")
    return budget


def _sieve(limit: int) -> np.ndarray:
    table = np.ones(limit + 1, dtype=bool)
    table[:2] = False
    table[4::2] = False
    for i in range(3, isqrt(limit) + 1, 2):
        if table[i]:
            table[i * i :: 2 * i] = False
    return table


def prime_table(limit: int) -> np.ndarray:
    """Boolean primality table covering ``0..limit`` (read-only view).

    The table is shared and grows by doubling; callers must not write to it.
    """
    global _table
    table = _table
    if limit < table.size:
        return table
    if limit >= TABLE_LIMIT:
        raise RangeTooLarge(f"prime table up to {limit} exceeds {TABLE_LIMIT} entries")
    with _lock:
        if limit >= _table.size:
            size = max(_INITIAL_TABLE, _table.size)
            while size <= limit:
                size *= 2
            fresh = _sieve(min(size, TABLE_LIMIT - 1))
            fresh.flags.writeable = False
            _table = fresh
        return _table


def primes_upto(limit: int, *, min_prime: int = 2) -> np.ndarray:
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    primes = np.flatnonzero(prime_table(limit)[: limit + 1]).astype(np.int64)
    if min_prime > 2:
        primes = primes[primes >= min_prime]
    return primes


def _miller_rabin(n: int) -> bool:
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Exact primality for ``0 <= n < 2**64``."""
    n = int(n)
    if n < 0:
        raise ValueError("is_prime expects a non-negative integer")
    if n < CACHE_LIMIT:
        return bool(prime_table(n)[n])
    if n >= 2**64:
        raise HOverflowError(f"{n} is outside the supported 64-bit range")
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    return _miller_rabin(n)


def relevant_primes(p: int) -> list[int]:
    """Primes ``q`` with ``3 < q <= p``: the only factors of interval multiples."""
    if not is_prime(p) or p <= 3:
        raise NotPrime(f"{p} is not a prime greater than 3")
    return primes_upto(p, min_prime=5).tolist()


@dataclass(frozen=True)
class MultipleProgression:
    """The progression ``(±6p; p²)`` of multiples of ``p`` inside H."""

    generator_prime: int

    def __post_init__(self):
        p = self.generator_prime
        if p <= 3 or not is_prime(p):
            raise NotPrime(f"{p} is not a prime greater than 3")

    @property
    def start(self) -> int:
        return self.generator_prime**2

    @property
    def step(self) -> int:
        return 6 * self.generator_prime


def progression_members_in(prog: MultipleProgression, lo: int, hi: int, branch=None) -> list[int]:
    """Members of ``p*H`` in ``[lo, hi)``, optionally restricted to one branch.

    Branch membership is read off ``|v|`` as everywhere else.
    """
    if lo >= hi:
        raise ValueError("empty range")
    p = prog.generator_prime
    want = None if branch is None else Branch.parse(branch)
    period = 6 * p
    # multiples of p coprime to 6 occupy two residues mod 6p
    residues = [k * p for k in (1, 5)]
    out = []
    for r in residues:
        first = lo + ((r - lo) % period)
        for v in range(first, hi, period):
            if want is None or traeger_of(v)[1] is want:
                out.append(v)
    return sorted(out)


@dataclass(eq=False)
class SegmentClassification:
    """Classification codes for träger ``traeger_lo <= t < traeger_hi`` of one branch."""

    branch: Branch
    traeger_lo: int
    traeger_hi: int
    codes: np.ndarray

    def __len__(self) -> int:
        return self.traeger_hi - self.traeger_lo

    @property
    def classes(self) -> list[MemberClass]:
        return [CODE_TO_CLASS[c] for c in self.codes.tolist()]

    @property
    def values(self) -> np.ndarray:
        t = np.arange(self.traeger_lo, self.traeger_hi, dtype=np.int64)
        v = 6 * t + int(self.branch)
        return v

    @property
    def is_prime_mask(self) -> np.ndarray:
        return self.codes == PRIME

    def count(self, cls: MemberClass) -> int:
        return int(np.count_nonzero(self.codes == CODE_TO_CLASS.index(MemberClass(cls))))


def _first_hits(primes: np.ndarray, b: int, lo: int) -> np.ndarray:
    """First träger ``t >= lo`` with ``q | 6t+b`` and ``6t+b >= q²``, per prime ``q``."""
    inv6 = np.where(primes % 6 == 1, (5 * primes + 1) // 6, (primes + 1) // 6)
    residue = (-b * inv6) % primes
    tmin = (primes * primes - b + 5) // 6
    start = np.maximum(tmin, lo)
    return start + (residue - start) % primes


def classify_segment(branch, traeger_lo: int, traeger_hi: int, *, budget: int | None = None) -> SegmentClassification:
    """Mark every member of one branch segment as unit, prime or multiple."""
    b = Branch.parse(branch)
    lo, hi = int(traeger_lo), int(traeger_hi)
    if not 0 <= lo < hi:
        raise ValueError("need 0 <= traeger_lo < traeger_hi")
    n = hi - lo
    limit = segment_budget() if budget is None else budget
    if n > limit:
        raise RangeTooLarge(f"segment of {n} entries exceeds the budget of {limit}")
    vmax = 6 * (hi - 1) + int(b)
    if vmax > INT64_MAX:
        raise HOverflowError("segment reaches beyond the 64-bit range")

    codes = np.full(n, PRIME, dtype=np.uint8)
    if lo == 0:
        codes[0] = UNIT
    base = primes_upto(isqrt(max(vmax, 1)), min_prime=5)
    if base.size:
        starts = _first_hits(base, int(b), lo)
        dense = base < n
        for q, s in zip(base[dense].tolist(), starts[dense].tolist()):
            if s < hi:
                codes[s - lo :: q] = MULTIPLE
        sparse = starts[~dense]
        codes[sparse[sparse < hi] - lo] = MULTIPLE
    return SegmentClassification(b, lo, hi, codes)


def classify_values(values: np.ndarray) -> np.ndarray:
    """Vectorised primality of non-negative integers via the shared table."""
    values = np.asarray(values, dtype=np.int64)
    if values.size == 0:
        return np.zeros(0, dtype=bool)
    table = prime_table(int(values.max()))
    return table[values]
