"""Independent brute-force oracles shared by the test modules.

Nothing here touches the package's sieve: primality is plain trial division.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations


@lru_cache(maxsize=None)
def td_prime(n: int) -> bool:
    n = abs(n)
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def td_primes(lo: int, hi: int) -> list[int]:
    return [n for n in range(lo, hi + 1) if td_prime(n)]


def td_next_prime(p: int) -> int:
    n = p + 1
    while not td_prime(n):
        n += 1
    return n


def interval_row(p: int) -> tuple[int, ...]:
    """(p, q, L, primes+, primes-, multiples+, multiples-, gap) by trial division."""
    q = td_next_prime(p)
    plus = [v for v in range(p * p, q * q) if v % 6 == 1]
    minus = [v - 2 for v in plus]
    L = len(plus)
    pp = sum(td_prime(v) for v in plus)
    pm = sum(td_prime(v) for v in minus)
    return (p, q, L, pp, pm, L - pp, L - pm, q - p)


def goldbach_pairs(e: int) -> list[tuple[int, int]]:
    return [(p, e - p) for p in range(5, e // 2 + 1) if td_prime(p) and td_prime(e - p)]


def ordered_triples(n: int) -> list[tuple[int, int, int]]:
    out = set()
    for x in range(5, n):
        for y in range(5, n - x):
            z = n - x - y
            if z >= 5 and td_prime(x) and td_prime(y) and td_prime(z):
                out.add((x, y, z))
    return sorted(out)


def unordered_triples(n: int) -> list[tuple[int, int, int]]:
    return sorted({tuple(sorted(t)) for t in ordered_triples(n)})


def permutation_count(t) -> int:
    return len(set(permutations(t)))
