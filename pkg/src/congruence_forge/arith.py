"""Integer and residue arithmetic: Legendre symbols, primality, factoring."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .errors import FactoringBudgetExceeded

# Deterministic Miller-Rabin for n < 3.3e24 (Sorenson & Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981

TRIAL_DIVISION_LIMIT = 10**6
DEFAULT_FACTOR_BUDGET = 10**7


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic below 3.3e24; above that the same 13 fixed bases are used
    together with 8 random ones, which leaves an error probability below
    4**-21 for composite inputs.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = list(_MR_BASES)
    if n >= _MR_DETERMINISTIC_LIMIT:
        rng = random.Random(n)
        bases += [rng.randrange(2, n - 1) for _ in range(8)]
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime_modulus(ell: int, minimum: int = 3) -> int:
    """Validate ``ell`` as an odd prime modulus no smaller than ``minimum``."""
    if not isinstance(ell, int) or not is_prime(ell):
        raise ValueError(f"{ell!r} is not prime")
    if ell < minimum:
        raise ValueError(f"prime {ell} is below the supported minimum {minimum}")
    return ell


def legendre(a: int, ell: int) -> int:
    """Legendre symbol (a/ell) via Euler's criterion; ell must be an odd prime."""
    r = pow(a % ell, (ell - 1) // 2, ell)
    return -1 if r == ell - 1 else r


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


_SMALL_PRIMES: list[int] = []


def _small_primes() -> list[int]:
    global _SMALL_PRIMES
    if not _SMALL_PRIMES:
        _SMALL_PRIMES = primes_up_to(TRIAL_DIVISION_LIMIT)
    return _SMALL_PRIMES


def _brent(n: int, budget: int, rng: random.Random) -> tuple[int | None, int]:
    """One Pollard-Brent run. Returns (factor or None, iterations used)."""
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    used = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            steps = min(m, r - k)
            for _ in range(steps):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
            used += steps
            if used > budget:
                return None, used
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            used += 1
            if g > 1:
                break
    return (g if g != n else None), used


@dataclass
class Factorization:
    """Prime factorization of |n|; ``complete`` is False if a cofactor was left unsplit."""

    n: int
    factors: dict[int, int] = field(default_factory=dict)
    complete: bool = True
    unfactored: int = 1

    def primes(self) -> list[int]:
        return sorted(self.factors)

    def product(self) -> int:
        out = self.unfactored
        for p, e in self.factors.items():
            out *= p**e
        return out

    def as_pairs(self) -> list[list[int]]:
        return [[p, self.factors[p]] for p in sorted(self.factors)]


def factor(n: int, budget: int = DEFAULT_FACTOR_BUDGET, strict: bool = True) -> Factorization:
    """Factor ``abs(n)``: trial division to 10**6, then Pollard-Brent.

    ``budget`` bounds the total number of rho iterations. When it is exhausted
    a :class:`FactoringBudgetExceeded` is raised carrying the partial
    factorization, unless ``strict`` is False, in which case the partial
    result is returned with ``complete=False``.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    m = abs(n)
    result = Factorization(n)
    facs = result.factors
    for p in _small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            facs[p] = e
    if m == 1:
        return result
    stack = [m]
    rng = random.Random(0x5EED ^ m)
    used = 0
    leftover = 1
    while stack:
        c = stack.pop()
        if c == 1:
            continue
        if is_prime(c):
            facs[c] = facs.get(c, 0) + 1
            continue
        r = math.isqrt(c)
        if r * r == c:
            stack += [r, r]
            continue
        d = None
        while d is None and used <= budget:
            d, u = _brent(c, budget - used, rng)
            used += u
        if d is None:
            leftover *= c
            continue
        stack += [d, c // d]
    if leftover != 1:
        result.complete = False
        result.unfactored = leftover
        if strict:
            raise FactoringBudgetExceeded(
                f"factoring budget of {budget} iterations exhausted; "
                f"unfactored cofactor {leftover}", partial=result)
    result.factors = dict(sorted(facs.items()))
    return result


def prime_divisors(n: int, budget: int = DEFAULT_FACTOR_BUDGET) -> list[int]:
    return factor(n, budget).primes()


def squarefree_kernel(n: int, budget: int = DEFAULT_FACTOR_BUDGET) -> tuple[int, list[int]]:
    """Return (sign, odd-exponent primes) so that n = sign * prod(primes) * square."""
    if n == 0:
        raise ValueError("0 has no squarefree kernel")
    sign = -1 if n < 0 else 1
    f = factor(n, budget)
    return sign, [p for p, e in f.factors.items() if e % 2]
