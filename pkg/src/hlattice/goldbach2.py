"""Binary Goldbach machinery on the rhombus sides of the prime lattice.

An even ``e > 8`` falls in exactly one residue class mod 6. Its symmetric
pairs ``(x, y)``, ``x + y = e``, with both components in H and träger >= 1
form one rhombus side per compatible quadrant:

* residue +2: quadrant 1, ``x, y`` in H+, ``A = (e - 8) / 6`` pairs
* residue -2: quadrant 3, ``x, y`` in H-, ``A = (e - 4) / 6`` pairs
* residue  0: quadrant 2 (``x`` in H-, ``y`` in H+) and its mirror,
  quadrant 4, each with ``A = e/6 - 1`` pairs

Components 2 and 3 never occur, so ``e`` in {4, 6, 8} is out of domain.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum

import numpy as np

from ._parallel import run_sharded, split_range
from .errors import IdentityViolation, NoSolution, OutOfDomain, QuadrantMismatch
from .sieve import classify_values, prime_table, primes_upto


class PairType(str, Enum):
    """Prime (p) / multiple (v) pattern of a pair, first component first."""

    PP = "pp"
    PV = "pv"
    VP = "vp"
    VV = "vv"


PAIR_TYPES = (PairType.PP, PairType.PV, PairType.VP, PairType.VV)


def pair_codes(first_prime: np.ndarray, second_prime: np.ndarray) -> np.ndarray:
    """Index into :data:`PAIR_TYPES` for each pair of primality flags."""
    return 2 * (~first_prime).astype(np.uint8) + (~second_prime).astype(np.uint8)


@dataclass(frozen=True)
class EvenClass:
    e: int
    residue: int
    traeger_sum: int


def classify_even(e: int) -> EvenClass:
    """Residue class of ``e`` among E+2, E0, E-2 with ``e = 6*s_e + residue``."""
    e = int(e)
    if e % 2 or e <= 8:
        raise OutOfDomain(f"{e} is not an even number greater than 8")
    r = e % 6
    residue = {0: 0, 2: 2, 4: -2}[r]
    return EvenClass(e, residue, (e - residue) // 6)


QUADRANT_RESIDUE = {1: 2, 2: 0, 3: -2, 4: 0}


def default_quadrant(e: int) -> int:
    return {2: 1, 0: 2, -2: 3}[classify_even(e).residue]


def compatible_quadrants(e: int) -> tuple[int, ...]:
    return {2: (1,), 0: (2, 4), -2: (3,)}[classify_even(e).residue]


@dataclass(eq=False)
class RhombusSide:
    """Ordered symmetric pairs of one rhombus side, stored column-wise."""

    e: int
    quadrant: int
    xs: np.ndarray
    ys: np.ndarray
    codes: np.ndarray

    @property
    def A(self) -> int:
        return int(self.xs.size)

    @property
    def pairs(self) -> list[tuple[int, int, PairType]]:
        return [
            (x, y, PAIR_TYPES[c])
            for x, y, c in zip(self.xs.tolist(), self.ys.tolist(), self.codes.tolist())
        ]


def rhombus_side(e: int, quadrant: int) -> RhombusSide:
    ec = classify_even(e)
    if quadrant not in QUADRANT_RESIDUE:
        raise QuadrantMismatch(f"quadrant must be 1..4, got {quadrant}")
    if QUADRANT_RESIDUE[quadrant] != ec.residue:
        raise QuadrantMismatch(
            f"{e} has residue {ec.residue:+d} mod 6; quadrant {quadrant} serves "
            f"residue {QUADRANT_RESIDUE[quadrant]:+d}"
        )
    if quadrant == 4:
        mirror = rhombus_side(e, 2)
        xs, ys = mirror.ys[::-1].copy(), mirror.xs[::-1].copy()
    else:
        if quadrant == 1:
            count, offset = (e - 8) // 6, 1
        elif quadrant == 3:
            count, offset = (e - 4) // 6, -1
        else:
            count, offset = e // 6 - 1, -1
        xs = 6 * np.arange(1, count + 1, dtype=np.int64) + offset
        ys = e - xs
    table = prime_table(e)
    codes = pair_codes(table[xs], table[ys])
    return RhombusSide(e, quadrant, xs, ys, codes)


@dataclass(frozen=True)
class PairCensus:
    A: int
    p_first: int
    v_first: int
    p_second: int
    v_second: int
    n_pp: int
    n_pv: int
    n_vp: int
    n_vv: int

    def validate(self) -> "PairCensus":
        checks = {
            "n_pp + n_pv + n_vp + n_vv = A": self.n_pp + self.n_pv + self.n_vp + self.n_vv == self.A,
            "n_pp + n_pv = p_first": self.n_pp + self.n_pv == self.p_first,
            "n_vp + n_vv = v_first": self.n_vp + self.n_vv == self.v_first,
            "n_pp + n_vp = p_second": self.n_pp + self.n_vp == self.p_second,
            "n_pv + n_vv = v_second": self.n_pv + self.n_vv == self.v_second,
            "closed forms for n_pp and n_vv": census_identity_check(self),
        }
        broken = [name for name, ok in checks.items() if not ok]
        if broken:
            raise IdentityViolation(f"census {self} violates: {', '.join(broken)}")
        return self

    @property
    def counts(self) -> dict[str, int]:
        return {"pp": self.n_pp, "pv": self.n_pv, "vp": self.n_vp, "vv": self.n_vv}

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def census_from_codes(codes: np.ndarray) -> PairCensus:
    """Census of a list of pair-type codes (indices into :data:`PAIR_TYPES`)."""
    pp, pv, vp, vv = np.bincount(codes, minlength=4).tolist()[:4]
    A = int(codes.size)
    return PairCensus(A, pp + pv, vp + vv, pp + vp, pv + vv, pp, pv, vp, vv).validate()


def pair_census(side: RhombusSide) -> PairCensus:
    return census_from_codes(side.codes)


def census_identity_check(census: PairCensus) -> bool:
    """Do the closed forms reproduce ``n_pp`` and ``n_vv`` exactly?

    ``n_pp = [A - (n_pv + n_vp) - (v_first - p_second)] / 2`` and
    ``n_vv = n_pp + (v_first - p_second)``.
    """
    overhang = census.v_first - census.p_second
    twice_pp = census.A - (census.n_pv + census.n_vp) - overhang
    if twice_pp % 2:
        return False
    return twice_pp // 2 == census.n_pp and census.n_vv == census.n_pp + overhang


def goldbach_solutions(e: int) -> list[tuple[int, int]]:
    """Unordered prime pairs ``p <= q``, both > 3, with ``p + q = e``.

    Raises :class:`NoSolution` when the rhombus side holds no pp pair.
    """
    side = rhombus_side(e, default_quadrant(e))
    hit = side.codes == 0
    xs, ys = side.xs[hit], side.ys[hit]
    lo, hi = np.minimum(xs, ys), np.maximum(xs, ys)
    keep = lo == xs if side.quadrant in (1, 3) else np.ones(lo.size, dtype=bool)
    pairs = sorted(zip(lo[keep].tolist(), hi[keep].tolist()))
    if not pairs:
        raise NoSolution(e)
    return pairs


# -- scanning ---------------------------------------------------------------


def pair_counts(lo: int, hi: int) -> np.ndarray:
    """Unordered counts of prime pairs ``5 <= p <= q`` with ``p + q = e``.

    Returns an array indexed by ``e - lo`` for ``lo <= e <= hi``. Exact
    integer arithmetic: for each ``p`` the admissible ``q`` form one
    contiguous slice of the prime list, and distinct ``q`` give distinct
    sums, so a fancy-indexed increment never collides.
    """
    counts = np.zeros(hi - lo + 1, dtype=np.int64)
    primes = primes_upto(hi, min_prime=5)
    if primes.size == 0:
        return counts
    first = np.searchsorted(primes, np.maximum(primes, lo - primes), "left")
    last = np.searchsorted(primes, hi - primes, "right")
    for k in range(primes.size):
        p = int(primes[k])
        if 2 * p > hi:
            break
        a, b = first[k], last[k]
        if a >= b:
            continue
        if p >= lo:
            counts[p - lo :][primes[a:b]] += 1
        else:
            counts[primes[a:b] - (lo - p)] += 1
    return counts


def _branch_prime_prefix(max_traeger: int) -> tuple[np.ndarray, np.ndarray]:
    """Prefix counts of primes among ``6t+1`` and ``6t-1`` for ``t = 1..k``."""
    t = np.arange(0, max_traeger + 1, dtype=np.int64)
    plus = classify_values(6 * t + 1)
    minus = classify_values(np.maximum(6 * t - 1, 0))
    plus[0] = minus[0] = False
    return np.cumsum(plus, dtype=np.int64), np.cumsum(minus, dtype=np.int64)


def _identity_vector(A, p_first, p_second, n_pp) -> np.ndarray:
    n_pv = p_first - n_pp
    n_vp = p_second - n_pp
    n_vv = A - n_pp - n_pv - n_vp
    overhang = (A - p_first) - p_second
    twice = A - (n_pv + n_vp) - overhang
    nonneg = (n_pv >= 0) & (n_vp >= 0) & (n_vv >= 0) & (n_pp >= 0)
    return nonneg & (twice % 2 == 0) & (twice // 2 == n_pp) & (n_vv == n_pp + overhang)


def _scan_shard(lo: int, hi: int):
    counts = pair_counts(lo, hi)[::2]
    evens = np.arange(lo, hi + 1, 2, dtype=np.int64)
    plus, minus = _branch_prime_prefix(hi // 6 + 1)
    table = prime_table(hi)
    half = evens // 2
    diag = (table[half] & (half >= 5)).astype(np.int64)
    r = evens % 6
    checked = np.zeros(evens.size, dtype=np.int64)
    passed = np.zeros(evens.size, dtype=np.int64)

    m = r == 2
    A = (evens[m] - 8) // 6
    ok = _identity_vector(A, plus[A], plus[A], 2 * counts[m] - diag[m])
    checked[m] += 1
    passed[m] += ok

    m = r == 4
    A = (evens[m] - 4) // 6
    ok = _identity_vector(A, minus[A], minus[A], 2 * counts[m] - diag[m])
    checked[m] += 1
    passed[m] += ok

    m = r == 0
    A = evens[m] // 6 - 1
    for first, second in ((minus[A], plus[A]), (plus[A], minus[A])):
        ok = _identity_vector(A, first, second, counts[m])
        checked[m] += 1
        passed[m] += ok
    return counts, checked, passed


@dataclass(eq=False)
class GoldbachScan:
    e_lo: int
    e_hi: int
    evens: np.ndarray
    counts: np.ndarray
    identity_checked: int
    identity_passed: int
    identity_ok: np.ndarray = field(repr=False)

    @property
    def no_solution(self) -> list[int]:
        return self.evens[self.counts == 0].tolist()

    @property
    def min_count(self) -> int:
        return int(self.counts.min())

    @property
    def argmin(self) -> int:
        return int(self.evens[np.argmin(self.counts)])

    def summary(self) -> dict:
        return {
            "e_lo": self.e_lo,
            "e_hi": self.e_hi,
            "evens": int(self.evens.size),
            "min_count": self.min_count,
            "min_at": self.argmin,
            "max_count": int(self.counts.max()),
            "no_solution": self.no_solution,
            "identity_checked": self.identity_checked,
            "identity_passed": self.identity_passed,
        }


def scan_goldbach(e_lo: int, e_hi: int, *, jobs: int | None = None, shards: int | None = None) -> GoldbachScan:
    """Count Goldbach solutions for every even ``e_lo <= e <= e_hi``.

    Shards run in parallel and are merged in ``e`` order, so the report is
    independent of ``jobs``.
    """
    if e_lo % 2 or e_hi % 2 or not 10 <= e_lo <= e_hi:
        raise OutOfDomain("need even bounds with 10 <= e_lo <= e_hi")
    from ._parallel import default_jobs

    n_jobs = default_jobs() if jobs is None else jobs
    pieces = split_range(e_lo, e_hi, shards or 4 * n_jobs)
    results = run_sharded(_scan_shard, pieces, n_jobs)
    counts = np.concatenate([r[0] for r in results])
    checked = np.concatenate([r[1] for r in results])
    passed = np.concatenate([r[2] for r in results])
    evens = np.arange(e_lo, e_hi + 1, 2, dtype=np.int64)
    return GoldbachScan(
        e_lo,
        e_hi,
        evens,
        counts,
        int(checked.sum()),
        int(passed.sum()),
        checked == passed,
    )
