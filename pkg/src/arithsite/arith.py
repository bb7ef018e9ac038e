"""Integer helpers: factorization, prime tests and checked arithmetic.

All integers handled by the library are bounded by ``MAX_INT`` (unsigned
64-bit range).  Python ints never wrap, so the bound is enforced explicitly
and exceeding it is a hard error rather than silent growth.
"""

from __future__ import annotations

import math
from functools import lru_cache, reduce

import sympy

from .errors import ArithmeticOverflow, InvalidInput

MAX_INT = 2**64 - 1


def checked(n: int) -> int:
    if n > MAX_INT:
        raise ArithmeticOverflow(f"{n} exceeds the 64-bit integer range")
    return n


def lcm(a: int, b: int) -> int:
    return checked(a // math.gcd(a, b) * b)


def lcm_all(values) -> int:
    return reduce(lcm, values, 1)


def gcd_all(values) -> int:
    return reduce(math.gcd, values, 0)


def checked_product(values) -> int:
    out = 1
    for v in values:
        out = checked(out * v)
    return out


@lru_cache(maxsize=65536)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as sorted ``(prime, exponent)`` pairs; ``()`` for 1."""
    if n < 1:
        raise InvalidInput(f"expected a positive integer, got {n}")
    if n == 1:
        return ()
    return tuple(sorted((int(p), int(e)) for p, e in sympy.factorint(n).items()))


def prime_support(n: int) -> frozenset[int]:
    return frozenset(p for p, _ in factorize(n))


def valuation(n: int, p: int) -> int:
    for q, e in factorize(n):
        if q == p:
            return e
    return 0


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    return n >= 2 and bool(sympy.isprime(n))


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidInput(f"{p!r} is not a prime")
    return p


def primes_below(n: int) -> list[int]:
    return [int(p) for p in sympy.primerange(2, n)]


def first_primes(k: int) -> list[int]:
    return [int(sympy.prime(i)) for i in range(1, k + 1)]
