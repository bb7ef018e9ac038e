"""Seeded random generators for the property suites."""

from __future__ import annotations

import random
from fractions import Fraction

from . import arith
from .bigcell import ConwayLattice
from .sieve import Sieve, normalize
from .skew import Fluctuation
from .supernatural import INF, PrimeSetDesc, Supernatural, SupernaturalClass
from .topologies import Constructible, atom, c_and, c_not, c_or

SMALL_PRIMES = arith.first_primes(10)


def sieve(rng: random.Random, max_gen: int, max_val: int, nonzero: bool = False) -> Sieve:
    k = rng.randint(1 if nonzero else 0, max_gen)
    return normalize(rng.randint(1, max_val) for _ in range(k))


def nonzero_sieve(rng: random.Random, max_gen: int, max_val: int) -> Sieve:
    return sieve(rng, max_gen, max_val, nonzero=True)


def supported_value(rng: random.Random, primes: list[int], max_val: int) -> int:
    """A random integer <= max_val whose prime divisors all lie in ``primes``."""
    value = 1
    for _ in range(rng.randint(1, 4)):
        p = rng.choice(primes)
        if value * p > max_val:
            break
        value *= p
    return value


def prime_set(rng: random.Random, pool: list[int] = SMALL_PRIMES, max_size: int = 4) -> list[int]:
    return sorted(rng.sample(pool, rng.randint(0, min(max_size, len(pool)))))


def klass(rng: random.Random, pool: list[int] = SMALL_PRIMES) -> SupernaturalClass:
    primes = prime_set(rng, pool, len(pool))
    if rng.random() < 0.5:
        return SupernaturalClass(PrimeSetDesc.finite(primes))
    return SupernaturalClass(PrimeSetDesc.cofinite(primes))


def supernatural(rng: random.Random, pool: list[int] = SMALL_PRIMES[:6]) -> Supernatural:
    default = INF if rng.random() < 0.3 else 0
    exceptions = {}
    for p in rng.sample(pool, rng.randint(0, len(pool))):
        exceptions[p] = INF if rng.random() < 0.3 else rng.randint(0, 5)
    return Supernatural.make(default, exceptions)


def formula(rng: random.Random, n_atoms: int, max_gen: int, max_val: int) -> Constructible:
    """A random boolean combination of ``n_atoms`` sieve opens."""
    parts = [atom(nonzero_sieve(rng, max_gen, max_val)) for _ in range(n_atoms)]
    if not parts:
        return atom(Sieve(())) if rng.random() < 0.5 else c_not(atom(Sieve(())))
    parts = [c_not(p) if rng.random() < 0.4 else p for p in parts]
    while len(parts) > 1:
        a = parts.pop(rng.randrange(len(parts)))
        b = parts.pop(rng.randrange(len(parts)))
        node = c_and(a, b) if rng.random() < 0.5 else c_or(a, b)
        parts.append(c_not(node) if rng.random() < 0.2 else node)
    return parts[0]


def formula_over(rng: random.Random, n_atoms: int, primes: list[int], max_val: int) -> Constructible:
    """Like :func:`formula` but with every atom generator supported on ``primes``."""
    parts = []
    for _ in range(n_atoms):
        gens = [supported_value(rng, primes, max_val) for _ in range(rng.randint(1, 3))]
        parts.append(atom(normalize(gens)))
    if not parts:
        return atom(Sieve((1,)))
    parts = [c_not(p) if rng.random() < 0.4 else p for p in parts]
    while len(parts) > 1:
        a = parts.pop(rng.randrange(len(parts)))
        b = parts.pop(rng.randrange(len(parts)))
        node = c_and(a, b) if rng.random() < 0.5 else c_or(a, b)
        parts.append(c_not(node) if rng.random() < 0.2 else node)
    return parts[0]


def theta(rng: random.Random, max_gen: int, max_val: int, max_atoms: int = 2) -> Fluctuation:
    domain = sieve(rng, max_gen, max_val)
    return Fluctuation(domain, formula(rng, rng.randint(0, max_atoms), 2, max_val))


def rational_lattice(rng: random.Random, max_num: int = 12) -> ConwayLattice:
    M = Fraction(rng.randint(1, max_num), rng.randint(1, max_num))
    h = rng.randint(1, max_num)
    return ConwayLattice(M, Fraction(rng.randrange(h), h))


def _ring(rng: random.Random):
    from . import sheaves

    primes = prime_set(rng)
    return sheaves.invert(primes) if rng.random() < 0.5 else sheaves.invert_all_except(primes)


def _rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-50, 50), rng.randint(1, 50))


def _truncation(rng: random.Random):
    from .bigcell import divisor_truncation

    return divisor_truncation(supernatural(rng), rng.randint(1, 60))


def _sieveset(rng: random.Random):
    from .sieve import orbit

    return orbit(sieve(rng, 3, 40), nonzero_sieve(rng, 2, 12))


VALUE_GENERATORS = {
    "sieve": lambda rng: sieve(rng, 4, 60),
    "supernatural": supernatural,
    "class": klass,
    "theta": lambda rng: theta(rng, 3, 30),
    "constructible": lambda rng: formula(rng, rng.randint(0, 4), 3, 30),
    "primeset": lambda rng: tuple(prime_set(rng)),
    "rational": _rational,
    "nat": lambda rng: rng.randint(0, 10**6),
    "bool": lambda rng: rng.random() < 0.5,
    "ring": _ring,
    "lattice": rational_lattice,
    "sieveset": _sieveset,
    "truncation": _truncation,
    "natlist": lambda rng: tuple(sorted(rng.sample(range(1, 200), rng.randint(0, 6)))),
}


def value_of_sort(rng: random.Random, sort: str):
    """A random canonical value of the given expression-language sort."""
    return VALUE_GENERATORS[sort](rng)
