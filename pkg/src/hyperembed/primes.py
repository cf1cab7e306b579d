"""Small integer arithmetic shared by the group modules."""

from __future__ import annotations

from functools import lru_cache

from sympy import isprime, n_order, primefactors

__all__ = ["prime_factors", "is_prime", "is_prime_power", "multiplicative_order", "part"]


@lru_cache(maxsize=None)
def prime_factors(n: int) -> list[int]:
    """Distinct primes dividing ``n``, ascending (empty for ``n = 1``)."""
    return [int(p) for p in primefactors(n)]


def is_prime(n: int) -> bool:
    return bool(isprime(n))


def is_prime_power(n: int, p: int | None = None) -> bool:
    ps = prime_factors(n)
    return len(ps) == 1 and (p is None or ps[0] == p)


def multiplicative_order(a: int, n: int) -> int:
    return int(n_order(a, n))


def part(n: int, primes) -> int:
    """Largest divisor of ``n`` whose prime factors all lie in ``primes``."""
    out = 1
    for p in primes:
        while n % p == 0:
            n //= p
            out *= p
    return out
