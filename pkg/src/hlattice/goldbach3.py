"""Three-prime sums on the octahedron layers of H x H x H.

A layer with träger sum ``s`` collects the points whose components have
trägers adding to ``s``; their sums are the four odd numbers
``6s - 3, 6s - 1, 6s + 1, 6s + 3``, the offset being the sign sum of the
component branches. Each of the eight sign patterns is one sub-cube.

Components are primes greater than 3 (träger 0 is excluded), so the smallest
admissible sum is 15.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from ._parallel import default_jobs, run_sharded, split_range
from .errors import NoSolution, OutOfDomain
from .hcore import traeger_of
from .sieve import prime_table, primes_upto

MIN_SUM = 15

# sign pattern -> sub-cube number; the four lower cubes, then the upper four
_SUBCUBES = {
    (1, 1, 1): 1,
    (-1, 1, 1): 2,
    (1, -1, 1): 3,
    (-1, -1, 1): 4,
    (-1, -1, -1): 5,
    (1, -1, -1): 6,
    (1, 1, -1): 7,
    (-1, 1, -1): 8,
}


def subcube_of(signs) -> int:
    key = tuple(int(s) for s in signs)
    if key not in _SUBCUBES:
        raise ValueError(f"not a sign triple: {signs!r}")
    return _SUBCUBES[key]


@dataclass(frozen=True)
class OctahedronLayer:
    s: int
    odd_numbers: tuple[int, int, int, int]
    # (sign triple, sub-cube, rest sum) for the eight sub-cubes, in sub-cube order
    subcube_signs: tuple[tuple[tuple[int, int, int], int, int], ...]

    def subcubes_for(self, n: int) -> list[int]:
        """Sub-cubes whose points in this layer sum to ``n``."""
        rest = n - 6 * self.s
        return [cube for signs, cube, r in self.subcube_signs if r == rest]


def octahedron_layer(s: int) -> OctahedronLayer:
    if s < 2:
        raise OutOfDomain(f"layer träger sum must be at least 2, got {s}")
    cubes = sorted(((signs, cube, sum(signs)) for signs, cube in _SUBCUBES.items()), key=lambda c: c[1])
    odd = tuple(6 * s + r for r in (-3, -1, 1, 3))
    return OctahedronLayer(s, odd, tuple(cubes))


def layers_of(n: int) -> list[int]:
    """Träger sums ``s >= 2`` whose layer contains the odd number ``n``."""
    return sorted({(n - r) // 6 for r in (-3, -1, 1, 3) if (n - r) % 6 == 0 and (n - r) // 6 >= 2})


@dataclass(frozen=True)
class TripleSolution:
    components: tuple[int, int, int]
    traegers: tuple[int, int, int]
    signs: tuple[int, int, int]

    @property
    def subcube(self) -> int:
        return subcube_of(self.signs)

    @property
    def layer(self) -> int:
        return sum(self.traegers)

    @classmethod
    def of(cls, components) -> "TripleSolution":
        coords = [traeger_of(c) for c in components]
        return cls(
            tuple(int(c) for c in components),
            tuple(t for t, _ in coords),
            tuple(int(b) for _, b in coords),
        )


def _check_odd(n: int) -> None:
    if n % 2 == 0 or n < MIN_SUM:
        raise OutOfDomain(f"{n} is not an odd number >= {MIN_SUM}")


def unordered_triples(n: int) -> list[tuple[int, int, int]]:
    """Prime triples ``5 <= x <= y <= z`` with ``x + y + z = n``."""
    _check_odd(n)
    table = prime_table(n)
    primes = primes_upto(n, min_prime=5)
    out = []
    for x in primes.tolist():
        if 3 * x > n:
            break
        ys = primes[(primes >= x) & (2 * primes <= n - x)]
        zs = n - x - ys
        hit = table[zs]
        out.extend((x, y, z) for y, z in zip(ys[hit].tolist(), zs[hit].tolist()))
    return out


def triple_solutions(n: int, layer: int | None = None) -> list[TripleSolution]:
    """Ordered prime triples summing to ``n``, annotated with trägers and signs.

    With ``layer`` only points of that octahedron layer are kept. Raises
    :class:`NoSolution` when nothing is found.
    """
    _check_odd(n)
    seen = []
    for triple in unordered_triples(n):
        for perm in sorted(set(permutations(triple))):
            sol = TripleSolution.of(perm)
            if layer is None or sol.layer == layer:
                seen.append(sol)
    seen.sort(key=lambda s: s.components)
    if not seen:
        raise NoSolution(n)
    return seen


def orbit_count(solutions) -> int:
    """Number of unordered solutions among ordered ones."""
    return len({tuple(sorted(s.components)) for s in solutions})


# -- scanning ---------------------------------------------------------------


def _ordered_pair_counts(m_max: int, primes: np.ndarray) -> np.ndarray:
    """``R2[m]`` = number of ordered prime pairs ``(x, y)``, both >= 5, with ``x + y = m``."""
    r2 = np.zeros(m_max + 1, dtype=np.int64)
    for p in primes.tolist():
        q = primes[primes <= m_max - p]
        if q.size == 0:
            break
        r2[p + q] += 1
    return r2


def _scan_shard(lo: int, hi: int):
    primes = primes_upto(hi, min_prime=5)
    table = prime_table(hi)
    r2 = _ordered_pair_counts(hi, primes)
    ns = np.arange(lo, hi + 1, 2, dtype=np.int64)
    ordered = np.zeros(ns.size, dtype=np.int64)
    twice = np.zeros(ns.size, dtype=np.int64)  # (x, x, z) with 2x + z = n
    minimum = np.zeros(ns.size, dtype=np.int64)
    for p in primes.tolist():
        if p + 10 > hi:
            break
        rest = ns - p
        ok = rest >= 10
        ordered[ok] += r2[rest[ok]]
        z = ns - 2 * p
        ok = z >= 5
        twice[ok] += table[z[ok]]
        fresh = (minimum == 0) & ok & (rest >= 10)
        fresh[fresh] = r2[rest[fresh]] > 0
        minimum[fresh] = p
    third = ns // 3
    triple = ((ns % 3 == 0) & table[third] & (third >= 5)).astype(np.int64)
    unordered = (ordered + 3 * twice + 2 * triple) // 6
    return ordered, unordered, minimum


@dataclass(eq=False)
class TripleScan:
    n_lo: int
    n_hi: int
    ns: np.ndarray
    ordered: np.ndarray
    unordered: np.ndarray
    min_component: np.ndarray = field(repr=False)

    @property
    def no_solution(self) -> list[int]:
        return self.ns[self.unordered == 0].tolist()

    @property
    def min_count(self) -> int:
        return int(self.unordered.min())

    @property
    def smallest_layer(self) -> np.ndarray:
        """Smallest träger sum ``s`` whose layer contains ``n``."""
        return np.maximum(2, (self.ns - 3 + 5) // 6)

    def summary(self) -> dict:
        return {
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "odd_numbers": int(self.ns.size),
            "min_count": self.min_count,
            "min_at": int(self.ns[np.argmin(self.unordered)]),
            "max_count": int(self.unordered.max()),
            "no_solution": self.no_solution,
        }

    CSV_HEADER = ("n", "s", "unordered_count", "ordered_count", "min_component")

    def rows(self):
        cols = (self.ns, self.smallest_layer, self.unordered, self.ordered, self.min_component)
        return zip(*(c.tolist() for c in cols))


def scan_3gh(n_lo: int, n_hi: int, *, jobs: int | None = None, shards: int | None = None) -> TripleScan:
    """Count three-prime representations for every odd ``n_lo <= n <= n_hi``."""
    if n_lo % 2 == 0 or n_hi % 2 == 0 or not MIN_SUM <= n_lo <= n_hi:
        raise OutOfDomain(f"need odd bounds with {MIN_SUM} <= n_lo <= n_hi")
    n_jobs = default_jobs() if jobs is None else jobs
    pieces = split_range(n_lo, n_hi, shards or n_jobs)
    results = run_sharded(_scan_shard, pieces, n_jobs)
    ordered, unordered, minimum = (np.concatenate([r[i] for r in results]) for i in range(3))
    ns = np.arange(n_lo, n_hi + 1, 2, dtype=np.int64)
    return TripleScan(n_lo, n_hi, ns, ordered, unordered, minimum)


def sign_histogram(solutions) -> dict[int, int]:
    """How many ordered solutions fall into each sub-cube."""
    return dict(sorted(Counter(s.subcube for s in solutions).items()))

