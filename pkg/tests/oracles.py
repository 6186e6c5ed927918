"""Independent brute-force references used by the tests.

Nothing here imports congruence_forge: counts come from enumerating the
combinatorial objects themselves.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def partitions(n: int, largest: int | None = None):
    """Yield partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    return sum(1 for _ in partitions(n))


def overpartition_count(n: int) -> int:
    """Each distinct part size may have its first occurrence overlined."""
    return sum(2 ** len(set(p)) for p in partitions(n))


def crank(p: tuple[int, ...]) -> int:
    ones = p.count(1)
    if ones == 0:
        return p[0]
    return sum(1 for part in p if part > ones) - ones


def crank_even_minus_odd(n: int) -> int:
    """M_e(n) - M_o(n); n = 1 uses the standard convention M(0,1) = -1, M(+-1,1) = 1."""
    if n == 0:
        return 1
    if n == 1:
        return -1 - 2
    total = 0
    for p in partitions(n):
        total += 1 if crank(p) % 2 == 0 else -1
    return total


def colored_frobenius_count(n: int, colors: int = 2) -> int:
    """Generalized Frobenius partitions using ``colors`` copies of the non-negative integers.

    A symbol is two rows of equal length r, each a strictly decreasing
    sequence of colored integers (distinct (value, color) pairs); it
    partitions r + (sum of all entries).
    """
    pool = [(v, c) for v in range(n) for c in range(colors)]
    rows_by_size: dict[tuple[int, int], int] = {}
    for r in range(0, n + 1):
        for combo in itertools.combinations(pool, r):
            s = sum(v for v, _ in combo)
            if s + r <= n:
                rows_by_size[(r, s)] = rows_by_size.get((r, s), 0) + 1
    total = 0
    for (r, s1), c1 in rows_by_size.items():
        for (r2, s2), c2 in rows_by_size.items():
            if r2 == r and r + s1 + s2 == n:
                total += c1 * c2
    return total


def trial_factor(n: int) -> dict[int, int]:
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def legendre_by_squares(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if any(x * x % p == a for x in range(1, p)) else -1


def naive_product(spec: dict[int, int], terms: int) -> list[int]:
    """Coefficients of prod_d prod_n (1 - q^(d n))^(r_d), by repeated
    multiplication and geometric-series division."""
    coeffs = [1] + [0] * (terms - 1)
    for d, r in spec.items():
        for n in range(1, terms):
            step = d * n
            if step >= terms:
                break
            for _ in range(abs(r)):
                if r > 0:
                    for i in range(terms - 1, step - 1, -1):
                        coeffs[i] -= coeffs[i - step]
                else:
                    for i in range(step, terms):
                        coeffs[i] += coeffs[i - step]
    return coeffs


def sigma(n: int, k: int) -> int:
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def theta0_coeffs(terms: int) -> list[int]:
    """theta0 = sum over all integers m of q^(m^2)."""
    out = [0] * terms
    m = 0
    while m * m < terms:
        out[m * m] += 1 if m == 0 else 2
        m += 1
    return out
